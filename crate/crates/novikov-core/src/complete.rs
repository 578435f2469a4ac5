//! Compositions, minimalization, and Gröbner–Shirshov completion.
//!
//! Completion repeatedly adjoins normal forms of nontrivial compositions.
//! Two procedures are provided:
//!
//! * [`complete_homogeneous`] — the staged procedure for dx-homogeneous
//!   relation sets. Stage `n -> n+1` checks all compositions with shifts at
//!   most `n+1`, skipping pairs already covered by an earlier stage. Every
//!   nontrivial composition found at stage `n` has dx at least `n+2`, so the
//!   part of the basis with dx at most `n` is final after stage `n`; this is
//!   what makes [`member_diff`] exact.
//! * [`buchberger_capped`] — a bounded sweep for arbitrary sets. Only
//!   ambiguities whose lcm has dx at most the cap are checked, and discovered
//!   elements whose leading monomial exceeds the cap are discarded (counted
//!   in the report). The result is saturated under the cap: no unchecked
//!   ambiguity fits under it.
//!
//! Both maintain a *minimal* basis: monic, no leading monomial reducible by
//! the rest of the set. Minimalization and the stage sweeps scan in a fixed
//! order and sort canonically, so completed bases are deterministic.

use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::reduce::{Reducer, SWordStep};
use crate::rels::RelationSet;
use crate::vars::GeneratorSet;
use crate::Error;

/// A composition of two shifted relations over the lcm of their leading
/// monomials: `value = (u1/a1) * D^t1(f) - (u2/a2) * D^t2(g)` where
/// `u_i = ambiguity / lm(D^t_i)` and `a_i` the leading coefficients. The
/// leading monomials cancel, so `value < ambiguity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    pub ambiguity: Monomial,
    pub value: Polynomial,
}

/// The composition of `(D^t1 f, D^t2 g)`, or `None` when their leading
/// monomials share no variable (the ambiguity is trivial by disjointness).
/// Errors on zero input polynomials.
pub fn composition(
    f: &Polynomial,
    t1: u32,
    g: &Polynomial,
    t2: u32,
) -> Result<Option<Composition>, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // A nonzero constant has zero derivative: no composition at shift >= 1.
    let Ok((lm1, a1)) = f.leading_of_derived(t1) else {
        return Ok(None);
    };
    let Ok((lm2, a2)) = g.leading_of_derived(t2) else {
        return Ok(None);
    };
    if !lm1.shares_variable(&lm2) {
        return Ok(None);
    }
    let w = lm1.lcm(&lm2);
    let value = composition_over(&f.derive(t1), &lm1, &a1, &g.derive(t2), &lm2, &a2, &w);
    Ok(Some(Composition {
        ambiguity: w,
        value,
    }))
}

/// Composition from precomputed derivatives and their leading data; `w` must
/// be divisible by both leading monomials.
pub(crate) fn composition_over(
    df: &Polynomial,
    lm1: &Monomial,
    a1: &Coeff,
    dg: &Polynomial,
    lm2: &Monomial,
    a2: &Coeff,
    w: &Monomial,
) -> Polynomial {
    let u1 = w.checked_div(lm1).expect("ambiguity divisible by lm1");
    let u2 = w.checked_div(lm2).expect("ambiguity divisible by lm2");
    let mut h = Polynomial::zero();
    h.add_scaled_mul(&a1.recip(), &u1, df);
    h.add_scaled_mul(&-a2.recip(), &u2, dg);
    debug_assert!(h.leading().map(|(m, _)| m < w).unwrap_or(true));
    h
}

/// Whether `h` reduces to zero against `rels` — the triviality test for
/// compositions.
pub fn is_trivial(h: &Polynomial, rels: &RelationSet) -> bool {
    let (nf, _) = Reducer::from_set(rels).normal_form(h);
    nf.is_zero()
}

/// Where a basis element came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Input relation `index` (position in the set handed to completion).
    Input { index: usize },
    /// Normal form of a composition found during completion.
    Composition {
        /// Stage (staged mode) or round (capped mode) of discovery.
        stage: u32,
        /// Leading monomial of the left relation at the time of discovery.
        left: Monomial,
        left_shift: u32,
        right: Monomial,
        right_shift: u32,
        ambiguity: Monomial,
    },
}

#[derive(Clone, Debug)]
struct Meta {
    provenance: Provenance,
    /// Tail-reduced or replaced during minimalization since discovery.
    reduced: bool,
    /// Present, with this exact polynomial, before the current stage began.
    from_previous: bool,
}

impl Meta {
    fn input(index: usize) -> Self {
        Meta {
            provenance: Provenance::Input { index },
            reduced: false,
            from_previous: false,
        }
    }
}

/// Sorts `polys` (and `meta` in step) by leading monomial, ties broken by
/// the canonical term-map order. All polynomials must be nonzero.
fn sort_parallel(polys: &mut Vec<Polynomial>, meta: &mut Vec<Meta>) {
    let mut idx: Vec<usize> = (0..polys.len()).collect();
    idx.sort_by(|&i, &j| {
        let (lmi, _) = polys[i].leading().expect("nonzero");
        let (lmj, _) = polys[j].leading().expect("nonzero");
        lmi.cmp(lmj).then_with(|| polys[i].canonical_cmp(&polys[j]))
    });
    *polys = idx.iter().map(|&i| polys[i].clone()).collect();
    *meta = idx.iter().map(|&i| meta[i].clone()).collect();
}

/// Reduces the set to minimal form in place: every element monic and fully
/// reduced against the others, zero reductions removed, canonical order.
/// Returns the elements that were removed outright.
fn minimalize_in_place(polys: &mut Vec<Polynomial>, meta: &mut Vec<Meta>) -> Vec<Polynomial> {
    for p in polys.iter_mut() {
        p.make_monic();
    }
    sort_parallel(polys, meta);
    let mut removed = Vec::new();
    loop {
        let mut action = None;
        {
            let mut red = Reducer::new(polys);
            for idx in 0..polys.len() {
                let needs_work = {
                    let poly = &polys[idx];
                    poly.monomials()
                        .any(|m| red.find_reduction(m, Some(idx)).is_some())
                };
                if needs_work {
                    let (nf, _) = red.normal_form_excluding(&polys[idx], Some(idx));
                    action = Some((idx, nf));
                    break;
                }
            }
        }
        match action {
            None => break,
            Some((idx, nf)) if nf.is_zero() => {
                removed.push(polys.remove(idx));
                meta.remove(idx);
            }
            Some((idx, nf)) => {
                polys[idx] = nf.monic();
                meta[idx].reduced = true;
                meta[idx].from_previous = false;
                sort_parallel(polys, meta);
            }
        }
    }
    removed
}

/// The minimal basis generating the same ideal: every element monic, no
/// monomial of any element reducible by the others. Deterministic: output
/// is sorted by leading monomial.
pub fn minimalize(rels: &RelationSet) -> RelationSet {
    let mut polys = rels.relations().to_vec();
    let mut meta: Vec<Meta> = (0..polys.len()).map(Meta::input).collect();
    minimalize_in_place(&mut polys, &mut meta);
    RelationSet::new(rels.gens().clone(), polys)
        .expect("minimalization never produces zero relations")
}

/// What one completion stage did.
#[derive(Clone, Debug)]
pub struct StageRecord {
    /// The stage this step started from (`n` in `n -> n+1`).
    pub stage: u32,
    /// Compositions evaluated (pairs sharing a variable, after skips).
    pub compositions_checked: u64,
    /// Nontrivial normal forms discovered (monic, deduplicated).
    pub discovered: Vec<Polynomial>,
    /// Discovered elements discarded because their leading dx exceeded the
    /// dx bound.
    pub pruned_over_bound: u64,
    /// Elements of the new basis that were not in the old one.
    pub entered: Vec<Polynomial>,
    /// Elements of the old basis no longer present (removed or replaced).
    pub removed: Vec<Polynomial>,
}

/// Staged completion state: the current minimal basis and how it got there.
pub struct CompletionState {
    gens: GeneratorSet,
    polys: Vec<Polynomial>,
    meta: Vec<Meta>,
    stage: u32,
    dx_bound: Option<u32>,
    history: Vec<StageRecord>,
}

impl CompletionState {
    /// Starts completion from `rels`, which must be dx-homogeneous (every
    /// relation's monomials share one dx value). With a dx bound, discovered
    /// elements whose leading dx exceeds the bound are discarded — sound for
    /// deciding membership of elements with dx within the bound, because in
    /// a dx-homogeneous ideal every composition chain out of a discarded
    /// element stays above the bound.
    pub fn new(rels: &RelationSet, dx_bound: Option<u32>) -> Result<Self, Error> {
        if !rels.is_dx_homogeneous() {
            return Err(Error::NotDxHomogeneous);
        }
        let mut polys = Vec::new();
        let mut meta = Vec::new();
        for (i, r) in rels.relations().iter().enumerate() {
            if let Some(bound) = dx_bound {
                let (lm, _) = r.leading().expect("relations are nonzero");
                if lm.dx_len() > bound {
                    // Irrelevant below the bound: every S-word of a
                    // dx-homogeneous relation has the relation's dx or more.
                    continue;
                }
            }
            polys.push(r.clone());
            meta.push(Meta::input(i));
        }
        minimalize_in_place(&mut polys, &mut meta);
        Ok(CompletionState {
            gens: rels.gens().clone(),
            polys,
            meta,
            stage: 0,
            dx_bound,
            history: Vec::new(),
        })
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn dx_bound(&self) -> Option<u32> {
        self.dx_bound
    }

    /// The current minimal basis, sorted by leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn provenance(&self, i: usize) -> &Provenance {
        &self.meta[i].provenance
    }

    /// Whether element `i` was tail-reduced or replaced since discovery.
    pub fn was_reduced(&self, i: usize) -> bool {
        self.meta[i].reduced
    }

    pub fn history(&self) -> &[StageRecord] {
        &self.history
    }

    /// The basis as a relation set (for reduction or serialization).
    pub fn to_relation_set(&self) -> RelationSet {
        RelationSet::new(self.gens.clone(), self.polys.clone())
            .expect("completion basis has no zero elements")
    }

    /// Runs one stage `n -> n+1`: checks every composition with shifts at
    /// most `n+1` not covered by a previous stage, adjoins the nontrivial
    /// normal forms, and reminimalizes.
    pub fn stage_step(&mut self) -> &StageRecord {
        let n = self.stage;
        let t_hi = n + 1;
        let old_polys = self.polys.clone();
        let mut checked = 0u64;
        let mut pruned = 0u64;
        let mut discovered: Vec<(Polynomial, Provenance)> = Vec::new();
        {
            let mut red = Reducer::new(&self.polys);
            let count = self.polys.len();
            for i in 0..count {
                for j in i..count {
                    for t1 in 0..=t_hi {
                        let Ok((lm1, a1)) = self.polys[i].leading_of_derived(t1) else {
                            break; // a constant: higher shifts vanish too
                        };
                        if let Some(bound) = self.dx_bound {
                            if lm1.dx_len() > bound {
                                break; // dx grows with the shift
                            }
                        }
                        for t2 in 0..=t_hi {
                            if i == j && t2 <= t1 {
                                continue; // self-pairs need distinct shifts
                            }
                            if self.meta[i].from_previous
                                && self.meta[j].from_previous
                                && t1 <= n
                                && t2 <= n
                            {
                                continue; // checked at an earlier stage
                            }
                            let Ok((lm2, a2)) = self.polys[j].leading_of_derived(t2) else {
                                continue;
                            };
                            if !lm1.shares_variable(&lm2) {
                                continue;
                            }
                            let w = lm1.lcm(&lm2);
                            if let Some(bound) = self.dx_bound {
                                if w.dx_len() > bound {
                                    continue; // nothing under the bound can come of it
                                }
                            }
                            checked += 1;
                            let mut h = Polynomial::zero();
                            let u1 = w.checked_div(&lm1).expect("lcm divisibility");
                            h.add_scaled_mul(&a1.recip(), &u1, red.shifted(i, t1));
                            let u2 = w.checked_div(&lm2).expect("lcm divisibility");
                            h.add_scaled_mul(&-a2.recip(), &u2, red.shifted(j, t2));
                            let (nf, _) = red.normal_form(&h);
                            if nf.is_zero() {
                                continue;
                            }
                            let (nf_lm, _) = nf.leading().expect("nonzero");
                            debug_assert!(
                                nf.uniform_dx().expect("dx-homogeneous closure") >= n + 2,
                                "stage-{n} discovery below dx {}",
                                n + 2
                            );
                            if let Some(bound) = self.dx_bound {
                                if nf_lm.dx_len() > bound {
                                    pruned += 1;
                                    continue;
                                }
                            }
                            let nf = nf.monic();
                            if discovered.iter().any(|(p, _)| *p == nf) {
                                continue;
                            }
                            let prov = Provenance::Composition {
                                stage: n,
                                left: self.polys[i].leading().expect("nonzero").0.clone(),
                                left_shift: t1,
                                right: self.polys[j].leading().expect("nonzero").0.clone(),
                                right_shift: t2,
                                ambiguity: w,
                            };
                            discovered.push((nf, prov));
                        }
                    }
                }
            }
        }
        for m in self.meta.iter_mut() {
            m.from_previous = true;
        }
        let discovered_polys: Vec<Polynomial> =
            discovered.iter().map(|(p, _)| p.clone()).collect();
        for (p, prov) in discovered {
            self.polys.push(p);
            self.meta.push(Meta {
                provenance: prov,
                reduced: false,
                from_previous: false,
            });
        }
        minimalize_in_place(&mut self.polys, &mut self.meta);
        let entered = self
            .polys
            .iter()
            .filter(|p| !old_polys.contains(p))
            .cloned()
            .collect();
        let removed = old_polys
            .iter()
            .filter(|p| !self.polys.contains(p))
            .cloned()
            .collect();
        self.stage = n + 1;
        self.history.push(StageRecord {
            stage: n,
            compositions_checked: checked,
            discovered: discovered_polys,
            pruned_over_bound: pruned,
            entered,
            removed,
        });
        self.history.last().expect("just pushed")
    }
}

/// Runs staged completion through stage `n` with dx bound `n`. For a
/// dx-homogeneous input the resulting basis decides membership for any
/// element of dx at most `n`; elements of the full (possibly infinite)
/// completed basis beyond dx `n` are deliberately not computed.
pub fn complete_homogeneous(rels: &RelationSet, n: u32) -> Result<CompletionState, Error> {
    let mut state = CompletionState::new(rels, Some(n))?;
    for _ in 0..n {
        state.stage_step();
    }
    Ok(state)
}

/// Outcome of an exact membership test.
pub struct Membership {
    pub member: bool,
    pub normal_form: Polynomial,
    /// Division steps over `basis`: `f = sum(steps) + normal_form`.
    pub certificate: Vec<SWordStep>,
    /// The stage-`n` basis the reduction ran against.
    pub basis: RelationSet,
    /// The stage completion ran to (`max dx of f`).
    pub stage: u32,
}

/// Decides `f ∈ Id[S]` for dx-homogeneous `S` by completing through stage
/// `n = max dx of f` and reducing. Exact: stages beyond `n` can only add
/// basis elements of dx above `n`, which cannot touch `f`.
pub fn member_diff(f: &Polynomial, rels: &RelationSet) -> Result<Membership, Error> {
    let n = f.max_dx().unwrap_or(0);
    let state = complete_homogeneous(rels, n)?;
    let basis = state.to_relation_set();
    let (nf, steps) = Reducer::from_set(&basis).normal_form(f);
    Ok(Membership {
        member: nf.is_zero(),
        normal_form: nf,
        certificate: steps,
        basis,
        stage: state.stage(),
    })
}

/// Report of a capped completion run.
#[derive(Clone, Debug)]
pub struct CapReport {
    pub cap: u32,
    /// Full sweeps over the basis (a round re-checks everything in cap).
    pub rounds: u32,
    /// Ambiguities evaluated across all rounds.
    pub ambiguities_checked: u64,
    /// Nontrivial normal forms found (before minimalization).
    pub nontrivial_found: u64,
    /// Nontrivial normal forms discarded because their leading monomial's
    /// dx exceeded the cap. Nonzero means the result may be a proper
    /// truncation of the completed basis.
    pub discarded_over_cap: u64,
}

impl CapReport {
    /// Whether any discovered element was dropped for exceeding the cap.
    pub fn truncated(&self) -> bool {
        self.discarded_over_cap > 0
    }
}

/// A basis saturated under a dx cap, with provenance and run report.
pub struct CappedCompletion {
    pub basis: RelationSet,
    /// Parallel to `basis.relations()`.
    pub provenance: Vec<Provenance>,
    pub report: CapReport,
}

/// Bounded completion for arbitrary relation sets: checks every ambiguity
/// whose lcm has dx at most `cap`, adjoining nontrivial normal forms whose
/// leading monomial fits under the cap, until a full sweep finds nothing
/// new. Input relations over the cap are kept but their oversized
/// ambiguities are not checked.
pub fn buchberger_capped(rels: &RelationSet, cap: u32) -> CappedCompletion {
    let mut polys = rels.relations().to_vec();
    let mut meta: Vec<Meta> = (0..polys.len()).map(Meta::input).collect();
    minimalize_in_place(&mut polys, &mut meta);
    let mut report = CapReport {
        cap,
        rounds: 0,
        ambiguities_checked: 0,
        nontrivial_found: 0,
        discarded_over_cap: 0,
    };
    loop {
        report.rounds += 1;
        let round = report.rounds;
        let count = polys.len();
        let mut red = Reducer::new(&polys);
        let mut new_meta = Vec::new();
        for i in 0..count {
            for j in i..count {
                // Shifts beyond the cap cannot yield an in-cap lcm.
                for t1 in 0..=cap {
                    let Ok((lm1, a1)) = polys[i].leading_of_derived(t1) else {
                        break; // a constant: higher shifts vanish too
                    };
                    if lm1.dx_len() > cap {
                        break; // dx grows with the shift
                    }
                    for t2 in 0..=cap {
                        if i == j && t2 <= t1 {
                            continue;
                        }
                        let Ok((lm2, a2)) = polys[j].leading_of_derived(t2) else {
                            break;
                        };
                        if lm2.dx_len() > cap {
                            break;
                        }
                        if !lm1.shares_variable(&lm2) {
                            continue;
                        }
                        let w = lm1.lcm(&lm2);
                        if w.dx_len() > cap {
                            continue;
                        }
                        report.ambiguities_checked += 1;
                        let mut h = Polynomial::zero();
                        let u1 = w.checked_div(&lm1).expect("lcm divisibility");
                        h.add_scaled_mul(&a1.recip(), &u1, red.shifted(i, t1));
                        let u2 = w.checked_div(&lm2).expect("lcm divisibility");
                        h.add_scaled_mul(&-a2.recip(), &u2, red.shifted(j, t2));
                        let (nf, _) = red.normal_form(&h);
                        if nf.is_zero() {
                            continue;
                        }
                        report.nontrivial_found += 1;
                        let (nf_lm, _) = nf.leading().expect("nonzero");
                        if nf_lm.dx_len() > cap {
                            report.discarded_over_cap += 1;
                            continue;
                        }
                        let prov = Provenance::Composition {
                            stage: round,
                            left: polys[i].leading().expect("nonzero").0.clone(),
                            left_shift: t1,
                            right: polys[j].leading().expect("nonzero").0.clone(),
                            right_shift: t2,
                            ambiguity: w,
                        };
                        red.push(nf.monic());
                        new_meta.push(Meta {
                            provenance: prov,
                            reduced: false,
                            from_previous: false,
                        });
                    }
                }
            }
        }
        if new_meta.is_empty() {
            break;
        }
        polys = (0..red.len()).map(|i| red.relation(i).clone()).collect();
        meta.extend(new_meta);
        minimalize_in_place(&mut polys, &mut meta);
    }
    CappedCompletion {
        basis: RelationSet::new(rels.gens().clone(), polys)
            .expect("completion basis has no zero elements"),
        provenance: meta.into_iter().map(|m| m.provenance).collect(),
        report,
    }
}
