//! Named groups of checks over the corpus and over generated instances.

use std::fmt;
use std::str::FromStr;

use super::checks::{
    ball_reports, check_conjecture_5_3, cohen_macaulay_reports, flag_sphere_reports, induced_boundary_reports,
    local_h_over, corner_deletion_reports, sphere_reports, triangulation_reports, TriangulationChecks,
};
use super::corpus::{bases, corpus_triangulations, fresh_label, Named};
use super::generator::{Instance, InstanceClass, InstanceGenerator, MAX_VERTICES};
use super::report::{CheckKind, VerificationReport};
use super::scans::{interior_vertex_pair_reports, nested_ball_reports};
use crate::complex::generators::{example_5_4_ball, simplex};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{is_cohen_macaulay, is_homology_sphere, FieldChoice, VerifiedBall};
use crate::par::{self, Exec};
use crate::subdivision::{antiprism, barycentric, edgewise, stellar, Triangulation};

/// Complexes with more facets than this are left out of the per-ball checks,
/// which subdivide them again and verify every link.
pub const BALL_FACET_LIMIT: usize = 300;
/// Triangulations of a simplex with more facets than this are left out of
/// the local h-polynomial checks over composed subdivisions.
pub const LOCAL_H_FACET_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    /// The locality formula for h.
    Locality,
    /// The theta formula for h.
    Theta,
    /// The local h-polynomial in terms of theta and derangements.
    Kms,
    /// Monotonicity of theta and the corollaries of the theta formula.
    Monotone,
    /// Properties of individual balls, spheres and Cohen-Macaulay complexes.
    Balls,
    /// The flag conjectures and what is known about them.
    Conjectures,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "locality", "theta", "kms", "monotone", "balls", "conjectures"];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "locality" => Suite::Locality,
            "theta" => Suite::Theta,
            "kms" => Suite::Kms,
            "monotone" => Suite::Monotone,
            "balls" => Suite::Balls,
            "conjectures" => Suite::Conjectures,
            _ => return Err(Error::OutOfRange(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::All,
            Suite::Locality,
            Suite::Theta,
            Suite::Kms,
            Suite::Monotone,
            Suite::Balls,
            Suite::Conjectures,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Self::NAMES[i])
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Largest dimension of corpus bases and generated instances.
    pub max_dim: usize,
    /// Generated instances per class and dimension.
    pub generated: u64,
    pub field: FieldChoice,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            seed: 0,
            max_dim: 3,
            generated: 8,
            field: FieldChoice::Rational,
            exec: Exec::Parallel,
        }
    }
}

enum Job {
    Triangulation(String, Triangulation, TriangulationChecks),
    Ball(String, SimplicialComplex),
    Sphere(String, SimplicialComplex),
    CohenMacaulay(String, SimplicialComplex),
    Nested(Instance),
    LocalH(String, Triangulation),
    CornerDeletion(String, SimplicialComplex),
    FlagSphere(String, SimplicialComplex),
    FlagBall(String, SimplicialComplex),
}

impl Job {
    fn run(&self, field: FieldChoice) -> Vec<VerificationReport> {
        match self {
            Job::Triangulation(name, t, which) => triangulation_reports(name, t, field, *which),
            Job::Ball(name, c) => match VerifiedBall::verify(c, field) {
                Ok(ball) => ball_reports(name, &ball, field),
                Err(_) => Vec::new(),
            },
            Job::Sphere(name, c) => {
                if is_homology_sphere(c, field) {
                    sphere_reports(name, c)
                } else {
                    Vec::new()
                }
            }
            Job::CohenMacaulay(name, c) => {
                if is_cohen_macaulay(c, field) {
                    cohen_macaulay_reports(name, c)
                } else {
                    Vec::new()
                }
            }
            Job::Nested(inst) => {
                let mut out = nested_ball_reports(inst, field);
                out.extend(interior_vertex_pair_reports(inst, field));
                out
            }
            Job::LocalH(name, t) => local_h_over(name, t, field),
            Job::CornerDeletion(name, c) => corner_deletion_reports(name, c, field),
            Job::FlagSphere(name, c) => flag_sphere_reports(name, c, field),
            Job::FlagBall(name, c) => {
                let run = || -> Result<Vec<VerificationReport>> {
                    let ball = VerifiedBall::verify(c, field)?;
                    let mut out = induced_boundary_reports(name, &ball)?;
                    out.push(check_conjecture_5_3(name, &ball)?);
                    Ok(out)
                };
                run().unwrap_or_else(|e| vec![VerificationReport::error("flag-ball-gamma", CheckKind::Conjecture, name, &e)])
            }
        }
    }
}

fn generated(config: &SuiteConfig, class: InstanceClass) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for dim in 1..=config.max_dim.min(super::generator::MAX_DIM) {
        let budget = (dim + 6).min(MAX_VERTICES);
        out.extend(InstanceGenerator::new(config.seed, class, dim, budget)?.take(config.generated));
    }
    Ok(out)
}

/// `sd`, antiprism and one stellar subdivision of a generated instance.
fn generated_triangulations(inst: &Instance) -> Result<Vec<Named<Triangulation>>> {
    let c = &inst.complex;
    let star = stellar(c, &c.facets()[0], &fresh_label(c, "o"))?;
    Ok([barycentric(c), antiprism(c), star]
        .into_iter()
        .map(|t| Named::new(format!("{}({})", t.kind(), inst.name), t))
        .collect())
}

fn jobs(config: &SuiteConfig) -> Result<Vec<Job>> {
    let s = config.suite;
    let which = TriangulationChecks {
        locality: s.includes(Suite::Locality),
        theta: s.includes(Suite::Theta),
        kms: s.includes(Suite::Kms),
        monotone: s.includes(Suite::Monotone),
    };
    let corpus = corpus_triangulations(config.max_dim)?;
    let balls = generated(config, InstanceClass::Ball)?;
    let spheres = generated(config, InstanceClass::Sphere)?;
    let cms = generated(config, InstanceClass::CohenMacaulay)?;
    let mut jobs = Vec::new();

    if which.any() {
        for t in &corpus {
            jobs.push(Job::Triangulation(t.name.clone(), t.value.clone(), which));
        }
        for inst in balls.iter().chain(&spheres).chain(&cms) {
            for t in generated_triangulations(inst)? {
                jobs.push(Job::Triangulation(t.name, t.value, which));
            }
        }
    }

    if s.includes(Suite::Monotone) {
        for inst in &balls {
            jobs.push(Job::Nested(inst.clone()));
        }
        for t in &corpus {
            let is_simplex = t.value.base().facets().len() == 1;
            if is_simplex && t.value.total().facets().len() <= LOCAL_H_FACET_LIMIT {
                jobs.push(Job::LocalH(t.name.clone(), t.value.clone()));
            }
        }
        let esd4 = edgewise(&simplex(4), 4)?;
        jobs.push(Job::CornerDeletion("esd4(simplex(4))".into(), esd4.total().clone()));
    }

    if s.includes(Suite::Balls) {
        let mut complexes: Vec<Named<SimplicialComplex>> = bases(config.max_dim);
        complexes.extend(
            corpus
                .iter()
                .filter(|t| t.value.kind() != "id")
                .map(|t| Named::new(t.name.clone(), t.value.total().clone())),
        );
        complexes.extend(balls.iter().chain(&spheres).chain(&cms).map(|i| Named::new(i.name.clone(), i.complex.clone())));
        for c in complexes {
            if c.value.facets().len() <= BALL_FACET_LIMIT {
                jobs.push(Job::Ball(c.name.clone(), c.value.clone()));
            }
            jobs.push(Job::Sphere(c.name.clone(), c.value.clone()));
            jobs.push(Job::CohenMacaulay(c.name, c.value));
        }
    }

    if s.includes(Suite::Conjectures) {
        for inst in generated(config, InstanceClass::FlagSphere)? {
            jobs.push(Job::FlagSphere(inst.name, inst.complex));
        }
        for inst in generated(config, InstanceClass::FlagBall)? {
            jobs.push(Job::FlagBall(inst.name, inst.complex));
        }
        jobs.push(Job::FlagBall("example_5_4_ball".into(), example_5_4_ball()));
    }
    Ok(jobs)
}

/// Runs a suite. Reports come back in a fixed order that depends only on
/// the configuration, not on the execution mode.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let config = *config;
    config.exec.install(move || {
        let jobs = jobs(&config)?;
        let field = config.field;
        Ok(par::map(&jobs, |j| j.run(field)).into_iter().flatten().collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::Summary;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_are_clean_and_deterministic() {
        for suite in [Suite::Locality, Suite::Conjectures] {
            let config = SuiteConfig {
                suite,
                max_dim: 2,
                generated: 2,
                seed: 3,
                ..SuiteConfig::default()
            };
            let par = run_suite(&config).unwrap();
            let seq = run_suite(&SuiteConfig { exec: Exec::Sequential, ..config }).unwrap();
            let lines = |r: &[VerificationReport]| r.iter().map(|x| x.to_json_line()).collect::<Vec<_>>();
            assert_eq!(lines(&par), lines(&seq));
            let summary = Summary::from_reports(&par);
            assert!(summary.is_clean(), "{summary:?}");
            assert!(summary.total > 0);
        }
    }
}
