//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N (<label>): pass` line on success (run with `--nocapture`
//! to see them; the per-test ok/FAILED lines carry the same information).
//!
//! Everything here is exact arithmetic — no tolerances anywhere.

mod util;

use novikov_core::{
    buchberger_capped, certificate_value, check_gsb_gdn, check_identities, member_diff,
    member_gdn, monomials_dx_at_most, rat, span_oracle, CompletionState, DVar, GdnExpr, GdnMode,
    Generator, GeneratorSet, IdealKind, Monomial, Polynomial, Reducer, Tableau,
};
use rand::Rng;

fn pass(n: u32, label: &str) {
    println!("criterion {n} ({label}): pass");
}

fn mono(vars: &[(u32, i32)]) -> Monomial {
    Monomial::from_vars(vars.iter().map(|&(g, b)| DVar::new(Generator(g), b)))
}

fn poly(vars: &[(u32, i32)]) -> Polynomial {
    Polynomial::from_monomial(mono(vars))
}

#[test]
fn criterion_01_gdn_identities() {
    let mut rng = util::rng(0xA11CE);
    for _ in 0..200 {
        let x = util::sample_poly(&mut rng, 3, 3, 3, 3);
        let y = util::sample_poly(&mut rng, 3, 3, 3, 3);
        let z = util::sample_poly(&mut rng, 3, 3, 3, 3);
        let (left_symmetry, right_commutativity) = check_identities(&x, &y, &z);
        assert!(left_symmetry.is_zero(), "left symmetry defect nonzero");
        assert!(right_commutativity.is_zero(), "right commutativity defect nonzero");
    }
    pass(1, "GDN identities on 200 random triples");
}

#[test]
fn criterion_02_nonfree_witness() {
    let a = || GdnExpr::gen(Generator(0));
    let sq = || GdnExpr::circle(a(), a());
    // (a o a) o (((a o a) o a) o a)
    let lhs = GdnExpr::circle(sq(), GdnExpr::circle(GdnExpr::circle(sq(), a()), a()));
    // ((a o a) o a) o ((a o a) o a)
    let half = || GdnExpr::circle(sq(), a());
    let rhs = GdnExpr::circle(half(), half());
    let difference = &lhs.to_poly() - &rhs.to_poly();
    assert!(difference.is_zero());
    // hand expansion with q = (a o a) o a, Dq = a[2]a[-1]^2 + 4a[1]a[0]a[-1]
    // + a[0]^3: both sides multiply out to the same five terms
    let mut expect = Polynomial::zero();
    expect.add_scaled(&rat(1), &poly(&[(0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, -1)]));
    expect.add_scaled(&rat(5), &poly(&[(0, 1), (0, 0), (0, 0), (0, 0), (0, -1), (0, -1)]));
    expect.add_scaled(&rat(4), &poly(&[(0, 1), (0, 1), (0, 0), (0, -1), (0, -1), (0, -1)]));
    expect.add_scaled(&rat(1), &poly(&[(0, 2), (0, 0), (0, 0), (0, -1), (0, -1), (0, -1)]));
    expect.add_scaled(&rat(1), &poly(&[(0, 2), (0, 1), (0, -1), (0, -1), (0, -1), (0, -1)]));
    assert_eq!(lhs.to_poly(), expect);
    assert_eq!(rhs.to_poly(), expect);
    pass(2, "witness identity holds exactly");
}

#[test]
fn criterion_03_multiplication_table_reproduction() {
    let rels = util::four_dim_table();

    // (a) every critical multiple with dx at most 9 has trivial composition
    let report = check_gsb_gdn(&rels, 9).unwrap();
    assert!(report.checked > 0);
    assert!(report.is_gsb_under_cap(), "found nontrivial compositions");

    // (b) weight -1 monomials of length <= 4 reduce into span{e_i[-1]},
    // and each e_i[-1] is irreducible
    let mut red = Reducer::from_set(&rels);
    let basis_monomials: Vec<Monomial> =
        (0..4u32).map(|i| mono(&[(i, -1)])).collect();
    for d in 1..=4u32 {
        for m in util::weight_minus_one_monomials(rels.gens(), d) {
            let (nf, _) = red.normal_form(&Polynomial::from_monomial(m));
            for w in nf.monomials() {
                assert!(
                    basis_monomials.contains(w),
                    "normal form escaped the claimed linear basis"
                );
            }
        }
    }
    for b in &basis_monomials {
        assert!(red.find_reduction(b, None).is_none(), "e_i[-1] reducible");
    }

    // (c) the multiplication table: e2 o e1 = e3, e3 o e1 = e4, rest 0
    for i in 0..4u32 {
        for j in 0..4u32 {
            let product = poly(&[(i, 0), (j, -1)]);
            let (nf, _) = red.normal_form(&product);
            let expect = match (i, j) {
                (1, 0) => poly(&[(2, -1)]),
                (2, 0) => poly(&[(3, -1)]),
                _ => Polynomial::zero(),
            };
            assert_eq!(nf, expect, "table entry ({i},{j})");
        }
    }
    pass(3, "four-letter table is a GDN basis with the claimed quotient");
}

#[test]
fn criterion_04_free_basis_dimensions() {
    let gens = GeneratorSet::new(["a"]).unwrap();
    let expect = [1u64, 1, 2, 3, 5, 7, 11, 15];
    for d in 1..=8u32 {
        let tableaux = Tableau::enumerate(&gens, d).unwrap();
        let count = tableaux.len() as u64;
        assert_eq!(count, expect[(d - 1) as usize]);
        assert_eq!(count, util::partition_count((d - 1) as usize));
        assert_eq!(
            count,
            util::weight_minus_one_monomials(&gens, d).len() as u64
        );
    }
    pass(4, "tableau counts match the partition oracle through degree 8");
}

#[test]
fn criterion_05_order_laws() {
    let mut rng = util::rng(0x5DE5);
    for _ in 0..10_000 {
        let u = util::sample_monomial(&mut rng, 3, 5, 4);
        let v = util::sample_monomial(&mut rng, 3, 5, 4);
        let w = util::sample_monomial(&mut rng, 3, 5, 4);
        // totality and antisymmetry
        assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
        // transitivity
        if u <= v && v <= w {
            assert!(u <= w);
        }
        // multiplication compatibility
        if u < v {
            assert!(u.mul(&w) < v.mul(&w));
            // derivation compatibility on the leading terms
            if !u.is_one() {
                let du = Polynomial::from_monomial(u.clone()).derive_once();
                let dv = Polynomial::from_monomial(v.clone()).derive_once();
                assert!(du.leading().unwrap().0 < dv.leading().unwrap().0);
            }
        }
    }
    let mut rng = util::rng(0xDE51);
    let mut checked = 0u32;
    while checked < 1_000 {
        let f = util::sample_poly(&mut rng, 3, 4, 4, 3);
        let t = rng.gen_range(0..=5u32);
        if f.is_zero() || f.leading().unwrap().0.is_one() {
            continue;
        }
        let (m, c) = f.leading_of_derived(t).unwrap();
        let d = f.derive(t);
        let (dm, dc) = d.leading().unwrap();
        assert_eq!((&m, &c), (dm, dc));
        checked += 1;
    }
    pass(5, "order laws and derived leading terms");
}

#[test]
fn criterion_06_staged_completion_stability() {
    let rels = util::circle_square();
    let f = poly(&[(0, 0), (0, -1)]);
    let cube = poly(&[(0, 0), (0, 0), (0, 0)]);

    let mut state = CompletionState::new(&rels, Some(6)).unwrap();
    let mut snapshots = vec![state.basis().to_vec()];
    for _ in 0..8 {
        state.stage_step();
        snapshots.push(state.basis().to_vec());
    }
    assert_eq!(state.basis(), &[f.clone(), cube.clone()]);

    // stability: once stage n has run, elements of dx <= n never change
    let stable = |snap: &[Polynomial], n: u32| -> Vec<Polynomial> {
        snap.iter()
            .filter(|p| p.uniform_dx().expect("staged bases are homogeneous") <= n)
            .cloned()
            .collect()
    };
    for (n, snap) in snapshots.iter().enumerate().skip(1) {
        for later in &snapshots[n..] {
            assert_eq!(
                stable(snap, n as u32),
                stable(later, n as u32),
                "low-dx elements moved after stage {n}"
            );
        }
    }

    // the same run without the dx bound keeps the lemma while growing
    let mut state = CompletionState::new(&rels, Some(8)).unwrap();
    let mut snapshots = vec![state.basis().to_vec()];
    for _ in 0..8 {
        state.stage_step();
        snapshots.push(state.basis().to_vec());
    }
    assert_eq!(
        state.basis(),
        &[f, cube, poly(&[(0, 1), (0, 1), (0, 0)])]
    );
    for (n, snap) in snapshots.iter().enumerate().skip(1) {
        for later in &snapshots[n..] {
            assert_eq!(stable(snap, n as u32), stable(later, n as u32));
        }
    }
    pass(6, "staged completion stabilizes with the stage-stability lemma");
}

#[test]
fn criterion_07_pbw_consistency() {
    let rels = util::circle_square();
    let mut non_members = Vec::new();
    for d in 1..=6u32 {
        for m in util::weight_minus_one_monomials(rels.gens(), d) {
            let f = Polynomial::from_monomial(m.clone());
            let by_completion = member_gdn(&f, &rels, GdnMode::Exact)
                .unwrap()
                .member;
            let by_oracle =
                span_oracle(&f, &rels, m.dx_len(), IdealKind::Gdn).unwrap();
            assert_eq!(by_completion, by_oracle, "PBW disagreement on {m:?}");
            if !by_completion {
                non_members.push(m);
            }
        }
    }
    assert_eq!(non_members, vec![mono(&[(0, -1)])]);
    pass(7, "membership matches the span oracle; quotient basis is {a[-1]}");
}

#[test]
fn criterion_08_membership_soundness() {
    let circle_square = util::circle_square();
    let gens_ab = GeneratorSet::new(["a", "b"]).unwrap();
    let mixed = novikov_core::RelationSet::new(
        gens_ab,
        vec![poly(&[(0, 0), (1, -1)])],
    )
    .unwrap();
    let mut rng = util::rng(0x5EED8);

    // 100 random S-word combinations: members with verified certificates
    for trial in 0..100 {
        let rels = if trial % 2 == 0 { &circle_square } else { &mixed };
        let letters = rels.gens().len() as u32;
        let terms = rng.gen_range(1..=3);
        let mut f = Polynomial::zero();
        for _ in 0..terms {
            let u = util::sample_monomial(&mut rng, letters, 2, 1);
            let t = rng.gen_range(0..=2u32);
            let s = rng.gen_range(0..rels.len());
            let c = util::sample_coeff(&mut rng);
            f.add_scaled_mul(&c, &u, &rels.get(s).unwrap().derive(t));
        }
        let verdict = member_diff(&f, rels).unwrap();
        assert!(verdict.member, "S-word combination rejected");
        assert!(verdict.normal_form.is_zero());
        assert_eq!(
            certificate_value(
                &verdict.certificate,
                &verdict.normal_form,
                verdict.basis.relations()
            ),
            f,
            "certificate does not reassemble the input"
        );
    }

    // 100 non-members: a pure bracket -1 monomial can never appear in the
    // ideal (every S-word term keeps a nonnegative bracket), so pinning a
    // nonzero coefficient on one certifies non-membership; the span oracle
    // independently confirms each.
    for trial in 0..100 {
        let rels = if trial % 2 == 0 { &circle_square } else { &mixed };
        let letters = rels.gens().len() as u32;
        let k = rng.gen_range(1..=3);
        let pin = Monomial::from_vars(
            (0..k).map(|_| DVar::new(Generator(rng.gen_range(0..letters)), -1)),
        );
        let mut g = util::sample_poly(&mut rng, letters, 2, 2, 1);
        while g.coeff(&pin).is_none() {
            g.add_scaled(&rat(1), &Polynomial::from_monomial(pin.clone()));
        }
        let verdict = member_diff(&g, rels).unwrap();
        assert!(!verdict.member, "non-member accepted");
        let cap = g.max_dx().unwrap();
        assert!(!span_oracle(&g, rels, cap, IdealKind::Differential).unwrap());
    }
    pass(8, "membership certificates verify; non-members rejected");
}

#[test]
fn criterion_09_reduction_confluence() {
    let mut rng = util::rng(0xC0FFEE);
    let cases: [(novikov_core::RelationSet, u32); 2] =
        [(util::circle_square(), 8), (util::four_dim_table(), 6)];
    for (rels, cap) in &cases {
        let completed = buchberger_capped(rels, *cap);
        assert!(!completed.report.truncated());
        let pool = monomials_dx_at_most(rels.gens(), *cap);
        let mut first = Reducer::from_set(&completed.basis);
        let mut last = Reducer::from_set(&completed.basis);
        for _ in 0..500 {
            let f = Polynomial::from_terms((0..rng.gen_range(1..=4)).map(|_| {
                (
                    pool[rng.gen_range(0..pool.len())].clone(),
                    util::sample_coeff(&mut rng),
                )
            }));
            let (nf_first, _) = first.normal_form(&f);
            let nf_last = last.normal_form_with(&f, |_, options| options.len() - 1);
            assert_eq!(nf_first, nf_last, "strategies disagree");
        }
    }
    pass(9, "normal forms agree across reduction strategies");
}

#[test]
fn criterion_10_dx_length_identity() {
    let mut rng = util::rng(0xD1DA);
    for _ in 0..10_000 {
        let m = util::sample_monomial(&mut rng, 3, 6, 5);
        let weight: i64 = m.iter_vars().map(|v| i64::from(v.bracket())).sum();
        assert_eq!(i64::from(m.dx_len()), weight + 2 * m.len() as i64);
        assert_eq!(m.weight(), weight);
    }
    pass(10, "dx length equals weight plus twice the length");
}
