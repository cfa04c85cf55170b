use proptest::prelude::*;
use sullivan::forms::PolyForm;
use sullivan::Rational;

/// Random form on `Δⁿ` of exterior degree `k` with polynomial degree ≤ 2.
fn form(n: usize, k: usize) -> impl Strategy<Value = PolyForm> {
    let term = (
        prop::collection::vec(0u32..=2, n),
        prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k.min(n)),
        -4i64..=4,
    );
    prop::collection::vec(term, 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(PolyForm::zero(n, k.min(n)), |acc, (exps, ext, c)| {
                let m =
                    PolyForm::monomial(n, exps, &ext, Rational::from_integer(c.into())).unwrap();
                &acc + &m
            })
    })
}

fn dim_and_form() -> impl Strategy<Value = PolyForm> {
    (2usize..=4, 0usize..=3).prop_flat_map(|(n, k)| form(n, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn face_face(w in dim_and_form()) {
        let n = w.dim();
        for j in 1..=n {
            for i in 0..j {
                let lhs = w.face(j).unwrap().face(i).unwrap();
                let rhs = w.face(i).unwrap().face(j - 1).unwrap();
                prop_assert_eq!(lhs, rhs, "d_i d_j, i={}, j={}", i, j);
            }
        }
    }

    #[test]
    fn degen_degen(w in dim_and_form()) {
        let n = w.dim();
        for j in 0..=n {
            for i in 0..=j {
                let lhs = w.degen(j).unwrap().degen(i).unwrap();
                let rhs = w.degen(i).unwrap().degen(j + 1).unwrap();
                prop_assert_eq!(lhs, rhs, "s_i s_j, i={}, j={}", i, j);
            }
        }
    }

    #[test]
    fn face_degen(w in dim_and_form()) {
        let n = w.dim();
        for j in 0..=n {
            let s = w.degen(j).unwrap();
            prop_assert_eq!(&s.face(j).unwrap(), &w);
            prop_assert_eq!(&s.face(j + 1).unwrap(), &w);
            for i in 0..j {
                prop_assert_eq!(s.face(i).unwrap(), w.face(i).unwrap().degen(j - 1).unwrap());
            }
            for i in j + 2..=n + 1 {
                prop_assert_eq!(s.face(i).unwrap(), w.face(i - 1).unwrap().degen(j).unwrap());
            }
        }
    }

    #[test]
    fn operators_are_dga_maps(w in dim_and_form(), v in (0usize..=2).prop_flat_map(|k| form(4, k))) {
        let n = w.dim();
        let v = restrict(&v, n);
        let wv = w.wedge(&v);
        prop_assert!(w.d().d().is_zero());
        for i in 0..=n {
            prop_assert_eq!(w.face(i).unwrap().d(), w.d().face(i).unwrap());
            prop_assert_eq!(w.degen(i).unwrap().d(), w.d().degen(i).unwrap());
            prop_assert_eq!(
                wv.face(i).unwrap(),
                w.face(i).unwrap().wedge(&v.face(i).unwrap())
            );
        }
    }
}

/// Faces of a form on `Δ⁴` down to `Δⁿ`.
fn restrict(v: &PolyForm, n: usize) -> PolyForm {
    let mut v = v.clone();
    while v.dim() > n {
        v = v.face(v.dim()).unwrap();
    }
    v
}
