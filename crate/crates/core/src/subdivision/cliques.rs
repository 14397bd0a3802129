//! Maximal cliques of small compatibility graphs (Bron–Kerbosch with
//! pivoting over word bitsets).

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| k * 64 + b)
        })
    }
}

/// All maximal cliques of the graph on `0..n` with edges given by `adjacent`.
pub(crate) fn maximal_cliques(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut nbrs = vec![Bits::empty(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                nbrs[i].insert(j);
                nbrs[j].insert(i);
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    expand(&nbrs, &mut current, Bits::full(n), Bits::empty(n), &mut out);
    out
}

fn expand(nbrs: &[Bits], current: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| nbrs[u].and(&p).count())
        .expect("p is nonempty");
    for v in p.and_not(&nbrs[pivot]).iter().collect::<Vec<_>>() {
        current.push(v);
        expand(nbrs, current, p.and(&nbrs[v]), x.and(&nbrs[v]), out);
        current.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        // path 0-1-2-3
        let mut c = maximal_cliques(4, |i, j| j == i + 1);
        c.iter_mut().for_each(|k| k.sort());
        c.sort();
        assert_eq!(c, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let mut k = maximal_cliques(70, |_, _| true);
        assert_eq!(k.len(), 1);
        k[0].sort();
        assert_eq!(k[0], (0..70).collect::<Vec<_>>());
        assert_eq!(maximal_cliques(3, |_, _| false).len(), 3);
        assert_eq!(maximal_cliques(0, |_, _| true), vec![Vec::<usize>::new()]);
    }
}
