//! The nine acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

mod common;

use std::io::{self, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use dgkoszul::assoc::{
    gauge_act, gauge_to_homotopy, homotopy_decompose, homotopy_to_gauge, interval_algebra, mc_check, DgAlgebra,
    GaugeElement,
};
use dgkoszul::format::Structure;
use dgkoszul::graded::GradedSpace;
use dgkoszul::koszul::{
    bar, ce, comass_check_augmented, comass_check_commutative, harrison, truncate, Adjunction,
};
use dgkoszul::lie::{
    ad_series_gauge, enveloping_truncated, exp_gauge, gauge_path_coefficients, gauge_to_sullivan, grouplike_act,
    mc_check_lie, sullivan_to_gauge, symmetric_power_dims, DgLieAlgebra, Enveloping,
};
use dgkoszul::scalar::int;
use dgkoszul::vector::Vector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn betti_list(betti: &std::collections::BTreeMap<i64, usize>, degrees: std::ops::RangeInclusive<i64>) -> Vec<usize> {
    degrees.map(|d| betti.get(&d).copied().unwrap_or(0)).collect()
}

fn random_in(space: &GradedSpace, degree: i64, rng: &mut ChaCha8Rng) -> Vector {
    space.range(degree).map(|k| (k, int(rng.gen_range(-2..=2)))).collect()
}

/// 1. CE(sl2) through weight 3: an 8-dimensional complex with cohomology
/// 1, 0, 0, 1, checked against cochains computed directly on Λ(sl2*).
fn ce_sl2() -> Outcome {
    let g = dgla("sl2");
    let t = truncate(&ce(&g), 3).map_err(|e| e.to_string())?;
    let a = t.algebra().ok_or("CE truncation is not an algebra")?;
    ensure(a.dim() == 8, || format!("complex has dimension {}", a.dim()))?;
    ensure(t.is_stable(2), || format!("stable only through {:?}", t.stable_through))?;
    let h = betti_list(&a.complex().unwrap().betti(), 0..=3);
    ensure(h == [1, 0, 0, 1], || format!("H = {h:?}"))?;
    let oracle = lie_cohomology_oracle(3, &lie_bracket_fn(&g));
    ensure(oracle == h, || format!("oracle gives {oracle:?}, library {h:?}"))?;
    Ok(format!("H = {h:?} on an 8-dimensional complex"))
}

/// 2. Bar(k×k) at weight 5: H = k in degree 0, zero in degrees 1..4. The
/// differential is also compared with the Leibniz expansion
/// `d(s^n) = Σ_i (-1)^i s^i (-s²) s^{n-1-i}`, which is `-s^{n+1}` for odd
/// `n` and zero for even `n`.
fn bar_k_cross_k() -> Outcome {
    let p = bar(&dga("k-cross-k")).map_err(|e| e.to_string())?;
    ensure(p.num_generators() == 1, || format!("{} generators", p.num_generators()))?;
    let s_deg = p.degree(0);
    let t = truncate(&p, 5).map_err(|e| e.to_string())?;
    let a = t.algebra().unwrap();
    let betti = a.complex().unwrap().betti();
    // s = ↓e* for the non-unit idempotent e, so |s| = 1
    ensure(s_deg == 1, || format!("generator has degree {s_deg}"))?;
    let h = betti_list(&betti, 0..=4);
    ensure(h == [1, 0, 0, 0, 0], || format!("H = {h:?}"))?;
    let word = |n: usize| if n == 0 { "1".to_string() } else { vec![p.generators().label(0); n].join("·") };
    for n in 1..5usize {
        let x = Vector::basis(a.space().index_of(&word(n)).unwrap());
        let expected = if n % 2 == 1 {
            Vector::term(a.space().index_of(&word(n + 1)).unwrap(), int(-1))
        } else {
            Vector::zero()
        };
        ensure(a.d(&x) == expected, || format!("d(s^{n}) = {}", a.space().label_vector(&a.d(&x))))?;
    }
    Ok(format!("H(0..4) = {h:?}"))
}

/// 3. Harr(Λ(x)), |x| = 3: one generator, of degree -2, with identically
/// zero bracket in every truncation.
fn harrison_lambda() -> Outcome {
    let p = harrison(&dga("lambda-x")).map_err(|e| e.to_string())?;
    ensure(p.num_generators() == 1, || format!("{} generators", p.num_generators()))?;
    ensure(p.degree(0) == -2, || format!("degree {}", p.degree(0)))?;
    for w in 1..=4 {
        let t = truncate(&p, w).map_err(|e| e.to_string())?;
        let g = t.lie().ok_or("not a Lie truncation")?;
        ensure(g.dim() == 1, || format!("W={w}: dimension {}", g.dim()))?;
        ensure(g.is_abelian(), || format!("W={w}: nonzero bracket"))?;
        ensure(g.d_basis(0).is_zero(), || "nonzero differential".into())?;
    }
    Ok("1-dimensional, abelian, generator in degree -2".into())
}

/// 4. Both adjunctions over every admissible pair of fixtures of dimension
/// at most 4, ten random MC elements each; arbitrary elements are also
/// tested for "dg map on either side ⇔ MC".
fn adjunction_suites() -> Outcome {
    let locals: Vec<(String, DgAlgebra)> =
        dga_fixtures().into_iter().filter(|(_, a)| is_local(a) && a.dim() <= 4).collect();
    let mut pairs = 0;
    let mut samples = 0;
    let mut nonzero = 0;
    let mut non_mc = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut run = |label: String, adj: Adjunction, rng: &mut ChaCha8Rng| -> Result<(), String> {
        let space = adj.tensor_space().clone();
        for _ in 0..10 {
            let m = adj.random_mc(rng).map_err(|e| format!("{label}: {e}"))?;
            nonzero += usize::from(!m.is_zero());
            let r = adj.round_trips(&m).map_err(|e| format!("{label}: {e}"))?;
            ensure(r.passed(), || format!("{label}, m = {}: {r}", space.label_vector(&m)))?;
            let y = random_in(&space, 1, rng);
            let mc = adj.is_mc(&y).unwrap();
            non_mc += usize::from(!mc);
            let free = adj.free_map_witness(&adj.free_images_of(&y)).unwrap().is_none();
            let formal = adj.formal_map_witness(&adj.formal_images_of(&y)).unwrap().is_none();
            ensure(free == mc && formal == mc, || {
                format!("{label}, y = {}: MC {mc}, free {free}, formal {formal}", space.label_vector(&y))
            })?;
            samples += 1;
        }
        pairs += 1;
        Ok(())
    };
    for (an, a) in locals.iter().filter(|(_, a)| a.is_graded_commutative()) {
        for (gn, g) in dgla_fixtures().into_iter().filter(|(_, g)| g.dim() <= 4) {
            let adj = Adjunction::lie(a, &g).map_err(|e| format!("Lie({gn}, {an}): {e}"))?;
            run(format!("Harr/CE ({an}, {gn})"), adj, &mut rng)?;
        }
    }
    for (an, a) in &locals {
        for (gn, g) in dga_fixtures()
            .into_iter()
            .filter(|(_, g)| g.dim() <= 4 && g.augmentation().is_some())
        {
            let adj = Adjunction::assoc(a, &g).map_err(|e| format!("Assoc({gn}, {an}): {e}"))?;
            run(format!("Cobar/Bar ({an}, {gn})"), adj, &mut rng)?;
        }
    }
    ensure(pairs >= 100, || format!("only {pairs} pairs"))?;
    ensure(nonzero > 0 && non_mc > 0, || "samples never left the trivial cases".into())?;
    Ok(format!(
        "{pairs} pairs, {samples} MC samples ({nonzero} nonzero), {non_mc} non-MC controls"
    ))
}

const TRIALS: usize = 200;

fn lie_trial(g: &DgLieAlgebra, u: &Enveloping, rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let space = g.space();
    let err = |e: dgkoszul::Error| e.to_string();
    let mut x0 = random_in(space, 1, rng);
    if !mc_check_lie(g, &x0).map_err(err)? {
        x0 = Vector::zero();
    }
    let x = exp_gauge(g, &random_in(space, 0, rng), &x0).map_err(err)?;
    let xi1 = random_in(space, 0, rng);
    let xi2 = random_in(space, 0, rng);
    // (i) the action preserves MC and agrees with the ad series
    let y = exp_gauge(g, &xi1, &x).map_err(err)?;
    ensure(mc_check_lie(g, &y).map_err(err)?, || "exp(ξ)·x is not MC".into())?;
    ensure(ad_series_gauge(g, &xi1, &x).map_err(err)? == y, || "ad series disagrees".into())?;
    // (ii) exp(ξ1)exp(ξ2) acts as the composite, and so does exp(log(...))
    let product = u.mul(&u.exp(&u.from_lie(&xi1)), &u.exp(&u.from_lie(&xi2)));
    let composite = exp_gauge(g, &xi1, &exp_gauge(g, &xi2, &x).map_err(err)?).map_err(err)?;
    ensure(grouplike_act(u, &product, &x).map_err(err)? == composite, || "product acts wrongly".into())?;
    let bch = u.to_lie(&u.log(&product).map_err(err)?).ok_or("log of a group-like is not primitive")?;
    ensure(exp_gauge(g, &bch, &x).map_err(err)? == composite, || "BCH element acts wrongly".into())?;
    // (iii) Sullivan round trip
    let bound = gauge_path_coefficients(g, &xi1, &x).map_err(err)?.len().saturating_sub(1);
    let z = gauge_to_sullivan(g, &x, &xi1, bound).map_err(err)?;
    ensure(z.eval0() == x && z.eval1() == y, || "Sullivan path has wrong endpoints".into())?;
    let back = sullivan_to_gauge(g, &z, bound).map_err(err)?;
    ensure(exp_gauge(g, &back, &x).map_err(err)? == y, || "recovered ξ moves x elsewhere".into())?;
    Ok(x != y)
}

fn assoc_trial(a: &DgAlgebra, rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let space = a.space();
    let err = |e: dgkoszul::Error| e.to_string();
    let gauge = |rng: &mut ChaCha8Rng| GaugeElement::new(a, random_in(space, 0, rng)).unwrap();
    let mut x0 = random_in(space, 1, rng);
    if !mc_check(a, &x0).map_err(err)? {
        x0 = Vector::zero();
    }
    let x = gauge_act(a, &gauge(rng), &x0).map_err(err)?;
    let (g1, g2) = (gauge(rng), gauge(rng));
    // (i)
    let y = gauge_act(a, &g1, &x).map_err(err)?;
    ensure(mc_check(a, &y).map_err(err)?, || "G·x is not MC".into())?;
    // (ii)
    let lhs = gauge_act(a, &g1.compose(&g2, a), &x).map_err(err)?;
    let rhs = gauge_act(a, &g1, &gauge_act(a, &g2, &x).map_err(err)?).map_err(err)?;
    ensure(lhs == rhs, || "(G1 G2)·x ≠ G1·(G2·x)".into())?;
    let inv = g1.inverse(a).map_err(err)?;
    ensure(gauge_act(a, &inv, &y).map_err(err)? == x, || "G⁻¹ does not undo G".into())?;
    // (iii)
    let z = gauge_to_homotopy(a, &x, &g1).map_err(err)?;
    let parts = homotopy_decompose(a, &z);
    ensure(parts.start == x && parts.end == y, || "homotopy has wrong endpoints".into())?;
    ensure(homotopy_to_gauge(a, &z).map_err(err)? == g1, || "homotopy_to_gauge ∘ gauge_to_homotopy ≠ id".into())?;
    Ok(x != y)
}

/// 5. Gauge suites: 200 trials on each of three nilpotent Lie and three
/// nilpotent associative fixtures.
fn gauge_suite() -> Outcome {
    let mut summary = vec![];
    for (i, name) in ["nil-chain", "heisenberg-dg", "sl2-eps-theta"].iter().enumerate() {
        let g = dgla(name);
        let u = Enveloping::filtered(&g).map_err(|e| format!("{name}: {e}"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
        let mut moved = 0;
        for t in 0..TRIALS {
            moved += usize::from(lie_trial(&g, &u, &mut rng).map_err(|e| format!("{name}, trial {t}: {e}"))?);
        }
        ensure(moved > 0, || format!("{name}: the gauge action never moved anything"))?;
        summary.push(format!("{name} {moved}/{TRIALS} moved"));
    }
    for (i, name) in ["upper-tri3", "upper-tri3-dg", "upper-tri4-dg"].iter().enumerate() {
        let a = dga(name);
        ensure(a.is_nilpotent(), || format!("{name} is not nilpotent"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(200 + i as u64);
        let mut moved = 0;
        for t in 0..TRIALS {
            moved += usize::from(assoc_trial(&a, &mut rng).map_err(|e| format!("{name}, trial {t}: {e}"))?);
        }
        ensure(moved > 0, || format!("{name}: the gauge action never moved anything"))?;
        summary.push(format!("{name} {moved}/{TRIALS} moved"));
    }
    Ok(summary.join(", "))
}

/// 6. The interval algebra, entry by entry.
fn interval() -> Outcome {
    let int_ = interval_algebra();
    let r = int_.check_axioms();
    ensure(r.passed(), || r.to_string())?;
    let s = int_.space();
    let e = |l: &str| Vector::basis(s.index_of(l).unwrap());
    let (a, b, c) = (e("a"), e("b"), e("c"));
    ensure(int_.d(&a) == c && int_.d(&b) == -&c && int_.d(&c).is_zero(), || "differential".into())?;
    let table = [
        (&a, &a, a.clone()),
        (&b, &b, b.clone()),
        (&a, &b, Vector::zero()),
        (&b, &a, Vector::zero()),
        (&c, &a, c.clone()),
        (&b, &c, c.clone()),
        (&a, &c, Vector::zero()),
        (&c, &b, Vector::zero()),
        (&c, &c, Vector::zero()),
    ];
    for (x, y, z) in table {
        ensure(int_.mul(x, y) == z, || {
            format!("{}·{} = {}", s.label_vector(x), s.label_vector(y), s.label_vector(&int_.mul(x, y)))
        })?;
    }
    ensure(int_.unit() == Some(&(&a + &b)), || "unit is not a + b".into())?;
    let h = betti_list(&int_.complex().unwrap().betti(), 0..=1);
    ensure(h == [1, 0], || format!("H = {h:?}"))?;
    ensure(load("interval") == Structure::Dga(int_), || "fixture differs".into())?;
    Ok("axioms, product table with ac = cb = 0, H = k in degree 0".into())
}

/// 7. Both comparison squares at every weight up to 4.
fn comparison_squares() -> Outcome {
    for w in 1..=4 {
        for name in ["dual-numbers", "k-eps-3"] {
            let r = comass_check_commutative(&dga(name), w).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("U∘Harr vs Cobar for {name} at W={w}: {r}"))?;
        }
        for name in ["k-cross-k", "interval"] {
            let r = comass_check_augmented(&dga(name), w).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("CE∘Lie vs Ab∘Bar for {name} at W={w}: {r}"))?;
        }
    }
    Ok("U∘Harr ≅ Cobar∘As and CE∘Lie ≅ Ab∘Bar for W = 1..4".into())
}

/// 8. PBW dimensions against a direct monomial count.
fn pbw() -> Outcome {
    let sl2 = dgla("sl2");
    let u = enveloping_truncated(&sl2, 3).dims_by_weight();
    ensure(u == [1, 3, 6, 10], || format!("sl2: {u:?}"))?;
    let cumulative: Vec<usize> = u.iter().scan(0, |acc, d| Some(*acc + d).inspect(|s| *acc = *s)).collect();
    ensure(cumulative == [1, 4, 10, 20], || format!("sl2 cumulative: {cumulative:?}"))?;
    let mut lines = vec![format!("sl2 {u:?}")];
    for name in ["odd-line", "g2dim", "abelian(2;1,1)", "sl2-eps-theta"] {
        let g = dgla(name);
        let degrees: Vec<i64> = g.space().basis().map(|(_, d, _)| d).collect();
        let u = enveloping_truncated(&g, 3).dims_by_weight();
        let oracle = symmetric_monomials_oracle(&degrees, 3);
        ensure(u == oracle, || format!("{name}: U {u:?}, monomials {oracle:?}"))?;
        ensure(symmetric_power_dims(g.space(), 3) == oracle, || format!("{name}: series disagrees"))?;
        lines.push(format!("{name} {u:?}"));
    }
    ensure(enveloping_truncated(&dgla("odd-line"), 3).dims_by_weight() == [1, 1, 0, 0], || "odd line".into())?;
    Ok(lines.join(", "))
}

/// 9. d² = 0 and the axioms across the closure of the fixtures under every
/// constructor.
fn closure_suite() -> Outcome {
    let nodes = closure();
    for (name, node) in &nodes {
        let r = node.check();
        ensure(r.passed(), || format!("{name}: {r}"))?;
    }
    Ok(format!("{} constructed objects", nodes.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 9] = [
        ("CE(sl2) cohomology", ce_sl2, Some(1)),
        ("Bar(k×k) quasi-isomorphic to k", bar_k_cross_k, Some(1)),
        ("Harr(Λ(x)) abelian, one generator", harrison_lambda, Some(1)),
        ("adjunction suites", adjunction_suites, Some(10)),
        ("gauge/MC property suite", gauge_suite, Some(30)),
        ("interval algebra", interval, None),
        ("comparison squares", comparison_squares, Some(10)),
        ("PBW dimensions", pbw, None),
        ("d²=0 over the fixture closure", closure_suite, None),
    ];
    let mut failures = vec![];
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if elapsed >= Duration::from_secs(*s) => {
                Err(format!("took {elapsed:.2?}, limit {s} s"))
            }
            (o, _) => o,
        };
        match &outcome {
            // straight to stderr so the lines survive libtest's output capture
            Ok(detail) => {
                let _ = writeln!(io::stderr(), "criterion {}: PASS  {name}: {detail} ({elapsed:.2?})", i + 1);
            }
            Err(why) => {
                let _ = writeln!(io::stderr(), "criterion {}: FAIL  {name}: {why} ({elapsed:.2?})", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
