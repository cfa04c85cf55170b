mod common;

use common::{all_fixtures, element, fixture};
use proptest::prelude::*;
use sullivan::cdga::Cdga;
use sullivan::Rational;

fn mixed() -> Cdga {
    Cdga::from_spec(
        "mixed",
        &[("a", 2), ("b", 2), ("x", 3), ("y", 3), ("z", 5)],
        &[],
    )
    .unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -5i64..=5), 1..4)
}

fn sign(p: u32) -> Rational {
    Rational::from_integer(if p.is_multiple_of(2) { 1 } else { -1 }.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graded_commutativity(p in 0u32..9, q in 0u32..9, s in picks(), t in picks()) {
        let c = mixed();
        let (a, b) = (element(&c, p, &s), element(&c, q, &t));
        prop_assert_eq!(&a * &b, (&b * &a).scale(&sign(p * q)));
    }

    #[test]
    fn associativity(p in 0u32..7, q in 0u32..7, r in 0u32..7,
                     s in picks(), t in picks(), u in picks()) {
        let c = mixed();
        let (a, b, e) = (element(&c, p, &s), element(&c, q, &t), element(&c, r, &u));
        prop_assert_eq!(&(&a * &b) * &e, &a * &(&b * &e));
    }

    #[test]
    fn leibniz(f in 0usize..4, p in 0u32..9, q in 0u32..9, s in picks(), t in picks()) {
        let c = fixture(["elliptic14", "nonformal", "s2xs3", "cp3"][f]);
        let (a, b) = (element(&c, p, &s), element(&c, q, &t));
        let lhs = c.d(&(&a * &b));
        let rhs = &(&c.d(&a) * &b) + &(&a * &c.d(&b)).scale(&sign(p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_zero_on_fixtures(p in 0u32..10, s in picks()) {
        for c in all_fixtures() {
            let a = element(&c, p, &s);
            prop_assert!(c.d(&c.d(&a)).is_zero(), "d² ≠ 0 on {}", c.name());
        }
    }
}

#[test]
fn square_zero_on_generators() {
    for c in all_fixtures() {
        for g in 0..c.gens().len() {
            assert!(
                c.d(c.d_of(g)).is_zero(),
                "{}: d²({})",
                c.name(),
                c.gens().get(g).name()
            );
        }
    }
}
