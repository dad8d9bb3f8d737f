use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::linalg::{SpaceRef, Vect};

use super::json::vect_terms_json;
use super::{CheckResult, Mode, Source, Status, Witness};

/// One input slot of a property: its full basis and, optionally, a generating set.
#[derive(Clone)]
pub struct Axis {
    pub name: String,
    pub basis: Arc<Vec<(String, Vect)>>,
    pub generators: Option<Arc<Vec<(String, Vect)>>>,
}

impl Axis {
    pub fn basis_of(name: impl Into<String>, space: &SpaceRef, order: u32) -> Axis {
        let basis = (0..space.dim()).map(|i| (space.label(i), Vect::basis(space, i, order))).collect();
        Axis { name: name.into(), basis: Arc::new(basis), generators: None }
    }

    pub fn from_list(name: impl Into<String>, elems: Vec<(String, Vect)>) -> Axis {
        Axis { name: name.into(), basis: Arc::new(elems), generators: None }
    }

    pub fn with_generators(mut self, gens: Vec<(String, Vect)>) -> Axis {
        self.generators = Some(Arc::new(gens));
        self
    }

    fn list(&self, src: Source) -> &[(String, Vect)] {
        match (src, &self.generators) {
            (Source::Generator, Some(g)) => g,
            _ => &self.basis,
        }
    }
}

type Eval<'a> = dyn Fn(&[&Vect]) -> (Vect, Vect) + Send + Sync + 'a;

/// An identity `lhs(inputs) = rhs(inputs)` to be checked over a product of axes.
pub struct Property<'a> {
    name: String,
    axes: Vec<Axis>,
    out: SpaceRef,
    eval: Box<Eval<'a>>,
}

impl<'a> Property<'a> {
    pub fn new(
        name: impl Into<String>,
        axes: Vec<Axis>,
        out: &SpaceRef,
        eval: impl Fn(&[&Vect]) -> (Vect, Vect) + Send + Sync + 'a,
    ) -> Self {
        Property { name: name.into(), axes, out: out.clone(), eval: Box::new(eval) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.axes.len()
    }

    fn sources(&self, use_generators: bool) -> Vec<Source> {
        self.axes
            .iter()
            .map(|a| if use_generators && a.generators.is_some() { Source::Generator } else { Source::Basis })
            .collect()
    }

    fn decode(&self, sources: &[Source], mut k: u64) -> Vec<(Source, usize)> {
        let mut out = vec![(Source::Basis, 0); self.axes.len()];
        for a in (0..self.axes.len()).rev() {
            let n = self.axes[a].list(sources[a]).len() as u64;
            out[a] = (sources[a], (k % n) as usize);
            k /= n;
        }
        out
    }

    fn eval_case(&self, case: &[(Source, usize)]) -> (Vect, Vect) {
        let inputs: Vec<&Vect> = case.iter().zip(&self.axes).map(|(&(s, i), a)| &a.list(s)[i].1).collect();
        (self.eval)(&inputs)
    }

    fn fails(&self, case: &[(Source, usize)]) -> bool {
        let (l, r) = self.eval_case(case);
        l != r
    }

    fn witness(&self, case: Vec<(Source, usize)>) -> Witness {
        let (l, r) = self.eval_case(&case);
        let label = |i: usize| self.out.label(i);
        Witness {
            inputs: case.iter().zip(&self.axes).map(|(&(s, i), a)| format!("{} = {}", a.name, a.list(s)[i].0)).collect(),
            lhs: l.render(&self.out),
            rhs: r.render(&self.out),
            lhs_value: vect_terms_json(&l, label),
            rhs_value: vect_terms_json(&r, label),
            case,
            detail: None,
        }
    }

    /// Exhaustive scan over the product of the chosen lists; returns (first failure, cases checked).
    fn scan(&self, use_generators: bool) -> (Option<Vec<(Source, usize)>>, u64) {
        let sources = self.sources(use_generators);
        let total: u64 = self.axes.iter().zip(&sources).map(|(a, &s)| a.list(s).len() as u64).product();
        let hit = (0..total).into_par_iter().find_first(|&k| self.fails(&self.decode(&sources, k)));
        match hit {
            Some(k) => (Some(self.decode(&sources, k)), k + 1),
            None => (None, total),
        }
    }

    /// Seeded uniform basis tuples; returns the lexicographically smallest failure.
    fn sample(&self, n: u64, seed: u64) -> Option<Vec<(Source, usize)>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ name_hash(&self.name));
        let cases: Vec<Vec<(Source, usize)>> = (0..n)
            .map(|_| self.axes.iter().map(|a| (Source::Basis, rng.gen_range(0..a.basis.len()))).collect())
            .collect();
        cases.into_par_iter().filter(|c| self.fails(c)).min()
    }

    pub fn run(&self, mode: &Mode) -> CheckResult {
        let start = Instant::now();
        if self.axes.iter().any(|a| a.basis.is_empty()) {
            return CheckResult { elapsed: start.elapsed(), ..CheckResult::skipped(&self.name, "empty input domain") };
        }
        let (fail, cases) = match *mode {
            Mode::Exhaustive => self.scan(false),
            Mode::Generators { guard_samples, seed } => {
                let (f, c) = self.scan(true);
                match f {
                    Some(f) => (Some(f), c),
                    None => (self.sample(guard_samples, seed), c + guard_samples),
                }
            }
            Mode::Sample { n, seed } => (self.sample(n, seed), n),
        };
        CheckResult {
            name: self.name.clone(),
            status: if fail.is_some() { Status::Fail } else { Status::Pass },
            mode: *mode,
            witness: fail.map(|c| self.witness(c)),
            cases_checked: cases,
            note: None,
            elapsed: start.elapsed(),
        }
    }

    /// Re-evaluates a recorded witness; true when it still fails.
    pub fn replay(&self, w: &Witness) -> bool {
        if w.case.len() != self.axes.len() {
            return false;
        }
        if w.case.iter().zip(&self.axes).any(|(&(s, i), a)| i >= a.list(s).len()) {
            return false;
        }
        self.fails(&w.case)
    }
}

fn name_hash(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Space;
    use crate::scalar::Cyclotomic;

    fn space() -> SpaceRef {
        Space::from_names("v", (0..6).map(|i| format!("e{i}")).collect())
    }

    #[test]
    fn passing_identity_counts_all_cases() {
        let s = space();
        let p = Property::new("sym", vec![Axis::basis_of("x", &s, 8), Axis::basis_of("y", &s, 8)], &s, |v| {
            (v[0].add(v[1]), v[1].add(v[0]))
        });
        let r = p.run(&Mode::Exhaustive);
        assert!(r.passed());
        assert_eq!(r.cases_checked, 36);
    }

    #[test]
    fn first_failure_is_lexicographic_and_replays() {
        let s = space();
        let o = 8;
        let p = Property::new("bad", vec![Axis::basis_of("x", &s, o), Axis::basis_of("y", &s, o)], &s, move |v| {
            let idx = v[0].terms()[0].0 + v[1].terms()[0].0;
            let l = v[0].clone();
            let r = if idx >= 7 { v[0].scale(&Cyclotomic::from_int(o, 2)) } else { v[0].clone() };
            (l, r)
        });
        let r = p.run(&Mode::Exhaustive);
        assert!(r.failed());
        let w = r.witness.unwrap();
        assert_eq!(w.case, vec![(Source::Basis, 2), (Source::Basis, 5)]);
        assert_eq!(r.cases_checked, 18);
        assert!(p.replay(&w));
        let s1 = p.run(&Mode::Sample { n: 200, seed: 3 });
        let s2 = p.run(&Mode::Sample { n: 200, seed: 3 });
        assert_eq!(s1, s2);
        assert!(s1.failed());
    }

    #[test]
    fn generator_mode_restricts_axis() {
        let s = space();
        let o = 8;
        let gens = vec![("e0".to_string(), Vect::basis(&s, 0, o))];
        let p = Property::new(
            "gen",
            vec![Axis::basis_of("x", &s, o).with_generators(gens), Axis::basis_of("y", &s, o)],
            &s,
            |v| (v[0].clone(), if v[0].terms()[0].0 == 0 { v[0].clone() } else { v[1].clone() }),
        );
        let r = p.run(&Mode::Generators { guard_samples: 0, seed: 0 });
        assert!(r.passed());
        assert_eq!(r.cases_checked, 6);
        assert!(p.run(&Mode::Generators { guard_samples: 100, seed: 1 }).failed());
    }
}
