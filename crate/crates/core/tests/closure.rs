mod common;

use common::*;
use dgkoszul::format::{self, Structure};
use dgkoszul::koszul::{abelianize, bar, ce, cobar, harrison, lie_functor, truncate, Truncation};
use dgkoszul::lie::lie_tensor;
use proptest::prelude::*;

fn check_truncations(p: &dgkoszul::koszul::Presentation, max_w: usize) -> Result<(), TestCaseError> {
    let r = p.check();
    prop_assert!(r.passed(), "{}", r);
    prop_assert!(p.d_squared_witness(3).is_none());
    for w in 1..=max_w {
        let Ok(t) = truncate(p, w) else { break };
        let r = match &t.result {
            Truncation::Algebra(a) => a.check_axioms(),
            Truncation::Lie(g) => g.check_axioms(),
        };
        prop_assert!(r.passed(), "W={}: {}", w, r);
    }
    Ok(())
}

#[test]
fn every_constructed_object_passes_its_checks() {
    let nodes = closure();
    assert!(nodes.len() > 400, "closure has only {} objects", nodes.len());
    let failures: Vec<String> = nodes
        .iter()
        .filter_map(|(name, node)| {
            let r = node.check();
            (!r.passed()).then(|| format!("{name}: {r}"))
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn stored_structures_survive_printing() {
    for name in all_fixture_names() {
        let s = load(&name);
        assert_eq!(format::parse(&format::print(&s)).unwrap(), s, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ce_of_random_abelian_families(degrees in prop::collection::vec(-2i64..3, 1..4)) {
        let ds: Vec<String> = degrees.iter().map(i64::to_string).collect();
        let g = dgla(&format!("abelian({};{})", degrees.len(), ds.join(",")));
        check_truncations(&ce(&g), 3)?;
    }

    #[test]
    fn constructions_on_spheres(n in 1usize..8) {
        let a = dga(&format!("sphere-{n}"));
        check_truncations(&bar(&a).unwrap(), 3)?;
        check_truncations(&abelianize(&bar(&a).unwrap()).unwrap(), 3)?;
        check_truncations(&cobar(&a).unwrap(), 3)?;
        check_truncations(&harrison(&a).unwrap(), 3)?;
        let l = lie_functor(&a).unwrap();
        prop_assert!(l.check_axioms().passed());
        check_truncations(&ce(&l), 3)?;
    }

    #[test]
    fn ce_of_local_tensors(gi in 0usize..5, ai in 0usize..5) {
        let g = dgla(["sl2", "heisenberg", "g2dim", "nonabelian2", "nil-chain"][gi]);
        let a = dga(["dual-numbers", "dual-numbers-odd", "k-eps-3", "eps-theta", "sphere-2"][ai]);
        let t = lie_tensor(&g, &a.augmentation_ideal().unwrap().0).unwrap();
        prop_assert!(t.check_axioms().passed());
        check_truncations(&ce(&t), 2)?;
        let s = Structure::Dgla(t);
        prop_assert_eq!(format::parse(&format::print(&s)).unwrap(), s);
    }
}
