//! Randomized checks of the structural laws of the `E4` reconstruction.

use std::sync::OnceLock;

use proptest::prelude::*;
use qgraph_core::graph::algebra::TWIST;
use qgraph_core::pipeline::E4Pipeline;
use qgraph_core::IntMatrix;

fn pipeline() -> &'static E4Pipeline {
    static P: OnceLock<E4Pipeline> = OnceLock::new();
    P.get_or_init(|| E4Pipeline::run().expect("pipeline"))
}

fn combine(coeffs: &[i64], mats: &[IntMatrix]) -> IntMatrix {
    let n = mats[0].rows();
    let mut out = IntMatrix::zeros(n, n);
    for (c, m) in coeffs.iter().zip(mats) {
        out.add_scaled(*c, m);
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| (i == j) as i64).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn annular_matrices_represent_fusion(l in 0usize..35, m in 0usize..35) {
        let p = pipeline();
        let f = &p.annular;
        let n = &p.ring.matrices[l];
        let coeffs: Vec<i64> = (0..35).map(|v| n[(m, v)]).collect();
        prop_assert_eq!(&f[l] * &f[m], combine(&coeffs, f));
    }

    #[test]
    fn toric_family_splits_every_k(l in 0usize..35, m in 0usize..35) {
        let p = pipeline();
        let t = &p.toric;
        let (lb, mb) = (p.ring.conjugate_index(l), p.ring.conjugate_index(m));
        let mut sum = IntMatrix::zeros(35, 35);
        for d in t.copies() {
            let w = &t.matrices[d];
            sum.add_scaled(w[(lb, mb)], w);
        }
        prop_assert_eq!(&sum, p.k_family.get(l, m));
    }

    #[test]
    fn graph_algebra_twist_reverses_products(a in 0usize..12, b in 0usize..12) {
        let g = &pipeline().algebra.algebra;
        let lhs: Vec<i64> = {
            let ab = g.product(a, b);
            let mut v = vec![0; 12];
            for (c, &x) in ab.iter().enumerate() {
                v[TWIST[c]] += x;
            }
            v
        };
        prop_assert_eq!(lhs, g.product(TWIST[b], TWIST[a]).to_vec());
    }

    #[test]
    fn oc_products_are_nonnegative_and_associative(x in 0usize..48, y in 0usize..48, z in 0usize..48) {
        let oc = &pipeline().oc;
        prop_assert!(oc.product(x, y).iter().all(|&c| c >= 0));
        let left = oc.multiply(oc.product(x, y), &unit(48, z));
        let right = oc.multiply(&unit(48, x), oc.product(y, z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twisted_toric_reduces_to_single_twist(x in 0usize..48, y in 0usize..48) {
        let p = pipeline();
        let oc = &p.oc;
        let tw = qgraph_core::graph::oc::TwistedToric::new(oc, 4).unwrap();
        let ws: Vec<IntMatrix> = (0..48).map(|z| tw.w(z, 0)).collect();
        let xy = oc.multiply(&unit(48, x), &oc.complex_conjugate(y));
        prop_assert_eq!(tw.w(x, y), combine(&xy, &ws));
    }

    #[test]
    fn dual_annular_matrices_are_nonnegative(x in 0usize..48) {
        let s = pipeline().oc.dual_annular(x);
        prop_assert!(s.data().iter().all(|&c| c >= 0));
    }
}
