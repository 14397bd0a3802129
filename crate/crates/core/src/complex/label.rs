use std::collections::HashMap;

use super::face::VertexId;

/// Bijection between vertex labels and dense ids `0..len`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelTable {
    labels: Vec<String>,
    ids: HashMap<String, VertexId>,
}

impl LabelTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = Self::new();
        for l in labels {
            table.intern(l);
        }
        table
    }

    /// Returns the id of `label`, registering it if new.
    pub fn intern(&mut self, label: impl Into<String>) -> VertexId {
        let label = label.into();
        if let Some(&id) = self.ids.get(&label) {
            return id;
        }
        let id = self.labels.len() as VertexId;
        self.ids.insert(label.clone(), id);
        self.labels.push(label);
        id
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: VertexId) -> &str {
        &self.labels[id as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}
