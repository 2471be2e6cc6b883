use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldConfig, PrimeField};
use crate::structure::{ElementId, OpTable, Structure};
use crate::verify::{Verdict, VerifyError};

use super::{AlgebraError, AssocMethod, GroupReport};

/// The two-sided identity of `op`, if any.
pub fn find_identity_element(s: &Structure, op: &str) -> Result<Option<ElementId>, AlgebraError> {
    let t = s.table(op)?;
    let n = s.n() as ElementId;
    Ok((0..n).find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x)))
}

/// Two-sided inverses with respect to `identity`, or `None` if some element
/// has none.
pub fn find_inverses(t: &OpTable, identity: ElementId) -> Option<Vec<ElementId>> {
    let n = t.n() as ElementId;
    (0..n).map(|x| (0..n).find(|&y| t.get(x, y) == identity && t.get(y, x) == identity)).collect()
}

/// Incremental closure under one operation. Every pair of members gets
/// combined exactly once in each order, so total work is `O(|closure|²)`.
pub(crate) struct Closure<'t> {
    t: &'t OpTable,
    member: Vec<bool>,
    list: Vec<ElementId>,
    done: usize,
}

impl<'t> Closure<'t> {
    pub fn new(t: &'t OpTable) -> Self {
        Closure { t, member: vec![false; t.n()], list: Vec::new(), done: 0 }
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.member[x as usize]
    }

    fn push(&mut self, x: ElementId) {
        if !self.member[x as usize] {
            self.member[x as usize] = true;
            self.list.push(x);
        }
    }

    pub fn add(&mut self, g: ElementId) {
        self.push(g);
        while self.done < self.list.len() {
            let x = self.list[self.done];
            for k in 0..=self.done {
                let y = self.list[k];
                self.push(self.t.get(x, y));
                self.push(self.t.get(y, x));
            }
            self.done += 1;
        }
    }
}

/// Elements generated by `generators` under `op` (sorted).
pub fn closure(s: &Structure, op: &str, generators: &[ElementId]) -> Result<Vec<ElementId>, AlgebraError> {
    let t = s.table(op)?;
    let mut c = Closure::new(t);
    for &g in generators {
        if g as usize >= s.n() {
            return Err(crate::structure::StructureError::IndexOutOfRange { index: g as u64, n: s.n() }.into());
        }
        c.add(g);
    }
    let mut out = c.list;
    out.sort_unstable();
    Ok(out)
}

/// Generating set built by repeatedly adding the least element outside the
/// current closure.
pub fn greedy_generators(s: &Structure, op: &str) -> Result<Vec<ElementId>, AlgebraError> {
    let t = s.table(op)?;
    let mut c = Closure::new(t);
    let mut gens = Vec::new();
    for x in 0..s.n() as ElementId {
        if !c.contains(x) {
            gens.push(x);
            c.add(x);
        }
    }
    Ok(gens)
}

/// Checks `a(bc) = (ab)c` for all `a, c` and `b` in `generators`, which is
/// equivalent to full associativity when the generators generate `s`.
pub fn light_associativity(s: &Structure, op: &str, generators: &[ElementId]) -> Result<bool, AlgebraError> {
    let t = s.table(op)?;
    let n = s.n();
    let closed = closure(s, op, generators)?.len();
    if closed != n {
        return Err(AlgebraError::NotGenerating { closure: closed, n });
    }
    Ok(light_unchecked(t, generators))
}

pub(crate) fn light_unchecked(t: &OpTable, generators: &[ElementId]) -> bool {
    let n = t.n() as ElementId;
    for &b in generators {
        let col_b: Vec<ElementId> = (0..n).map(|a| t.get(a, b)).collect();
        let row_b = t.row(b);
        for a in 0..n {
            let ra = t.row(a);
            let rab = t.row(col_b[a as usize]);
            if row_b.iter().zip(rab).any(|(&bc, &abc)| ra[bc as usize] != abc) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive `O(n³)` associativity check.
pub fn is_associative_brute(t: &OpTable) -> bool {
    let gens: Vec<ElementId> = (0..t.n() as ElementId).collect();
    light_unchecked(t, &gens)
}

/// Bilinear extension of `t` to formal sums.
fn formal_product(field: &PrimeField, t: &OpTable, u: &[u64], v: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; u.len()];
    for (i, &ui) in u.iter().enumerate() {
        if ui == 0 {
            continue;
        }
        for (&k, &vj) in t.row(i as ElementId).iter().zip(v) {
            out[k as usize] = field.add(out[k as usize], field.mul(ui, vj));
        }
    }
    out
}

/// Randomized associativity test: compares `(r s) t` with `r (s t)` for random
/// formal sums. A failure is always genuine; a pass is wrong with
/// probability at most `(3/p)^trials`.
pub fn rs_associativity_test(s: &Structure, op: &str, cfg: &FieldConfig) -> Result<Verdict, AlgebraError> {
    let t = s.table(op)?;
    let field = PrimeField::new(cfg.p).map_err(VerifyError::from)?;
    if cfg.trials == 0 {
        return Err(VerifyError::NoTrials.into());
    }
    let n = s.n();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let r = field.random_vec(&mut rng, n);
        let u = field.random_vec(&mut rng, n);
        let w = field.random_vec(&mut rng, n);
        let left = formal_product(&field, t, &formal_product(&field, t, &r, &u), &w);
        let right = formal_product(&field, t, &r, &formal_product(&field, t, &u, &w));
        if left != right {
            return Ok(Verdict::Fails { witness: None });
        }
    }
    Ok(Verdict::Holds { err_bound: (3.0 / cfg.p as f64).powi(cfg.trials as i32) })
}

/// Largest generator count a group of order `n` can need from
/// [`greedy_generators`]: the first pick may be the identity, and every later
/// one at least doubles the subgroup.
pub(crate) fn generator_bound(n: usize) -> usize {
    (usize::BITS - n.max(1).leading_zeros()) as usize
}

/// Group axioms for `op`. With identity and inverses present, associativity
/// is decided exactly by Light's test on greedy generators; otherwise the
/// randomized test is used.
pub fn group_report(s: &Structure, op: &str, cfg: &FieldConfig) -> Result<GroupReport, AlgebraError> {
    let t = s.table(op)?;
    let identity_elem = find_identity_element(s, op)?;
    let inverses_ok = identity_elem.is_some_and(|e| find_inverses(t, e).is_some());
    let abelian = t.is_commutative();
    let (associative, assoc_method) = if inverses_ok {
        let gens = greedy_generators(s, op)?;
        (gens.len() <= generator_bound(s.n()) && light_unchecked(t, &gens), AssocMethod::Light)
    } else {
        (rs_associativity_test(s, op, cfg)?.holds(), AssocMethod::Randomized)
    };
    Ok(GroupReport { identity_elem, inverses_ok, associative, assoc_method, abelian })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{cyclic_product, random_latin_square};
    use crate::structure::make_zn;

    #[test]
    fn identities() {
        let z5 = make_zn(5, true).unwrap();
        assert_eq!(find_identity_element(&z5, "+").unwrap(), Some(0));
        let units = z5.restrict_op("*", &[1, 2, 3, 4]).unwrap();
        // element 1 of Z5 sits at position 0 of the restriction
        assert_eq!(find_identity_element(&units, "*").unwrap(), Some(0));
        let zero = Structure::new(2, vec![("*".into(), OpTable::from_fn(2, |_, _| 0))]).unwrap();
        assert_eq!(find_identity_element(&zero, "*").unwrap(), None);
    }

    #[test]
    fn light_examples() {
        let z4 = make_zn(4, false).unwrap();
        assert!(light_associativity(&z4, "+", &[1]).unwrap());
        let bad = z4.mutate_entry("+", 2, 2, 1).unwrap();
        assert_eq!(light_associativity(&bad, "+", &[1]).unwrap(), is_associative_brute(bad.table("+").unwrap()));
        assert!(!is_associative_brute(bad.table("+").unwrap()));
        assert!(light_associativity(&make_zn(6, false).unwrap(), "+", &[5]).unwrap());
        assert_eq!(
            light_associativity(&make_zn(6, false).unwrap(), "+", &[2]),
            Err(AlgebraError::NotGenerating { closure: 3, n: 6 })
        );
    }

    #[test]
    fn closure_and_generators() {
        let s = cyclic_product(&[2, 2, 3]);
        assert_eq!(closure(&s, "+", &[1]).unwrap(), vec![0, 1]);
        let gens = greedy_generators(&s, "+").unwrap();
        assert_eq!(closure(&s, "+", &gens).unwrap().len(), 12);
        assert!(gens.len() <= generator_bound(12));
        assert_eq!(generator_bound(12), 4);
        assert_eq!(generator_bound(1), 1);
    }

    #[test]
    fn rs_examples() {
        let cfg = FieldConfig::default();
        assert!(rs_associativity_test(&make_zn(3, false).unwrap(), "+", &cfg).unwrap().holds());
        assert!(rs_associativity_test(&make_zn(1, false).unwrap(), "+", &cfg).unwrap().holds());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut found = false;
        for _ in 0..10 {
            let l = random_latin_square(8, &mut rng);
            if is_associative_brute(l.table("*").unwrap()) {
                continue;
            }
            found = true;
            let cfg = FieldConfig { trials: 20, ..FieldConfig::default() };
            assert_eq!(rs_associativity_test(&l, "*", &cfg).unwrap(), Verdict::Fails { witness: None });
        }
        assert!(found);
    }

    #[test]
    fn reports() {
        let cfg = FieldConfig::default();
        let r = group_report(&make_zn(6, true).unwrap(), "+", &cfg).unwrap();
        assert!(r.is_group() && r.abelian && r.assoc_method == AssocMethod::Light);
        let r = group_report(&make_zn(6, true).unwrap(), "*", &cfg).unwrap();
        assert!(!r.inverses_ok && r.associative && r.assoc_method == AssocMethod::Randomized);
    }

    #[test]
    fn light_agrees_with_brute_force_on_mutations() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut s = make_zn(n, false).unwrap();
            for _ in 0..rng.gen_range(0..3) {
                let (i, j, v) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                s = s.mutate_entry("+", i as u32, j as u32, v as u32).unwrap();
            }
            let gens = greedy_generators(&s, "+").unwrap();
            assert_eq!(light_associativity(&s, "+", &gens).unwrap(), is_associative_brute(s.table("+").unwrap()));
        }
    }
}
