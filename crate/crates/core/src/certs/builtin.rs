//! Built-in certificates: the density-4/25 base of `G5` and the 40/7 gyrocolouring of `K5 ∪ K2[C5]`.

use crate::graphs::{
    complete, cycle, disjoint_union, g5, lexicographic, AbelianGroup, Graph, GroupElement,
};
use crate::gyro::BaseCertificate;
use crate::rational::{int, ratio, Rational};

use super::continuous::ContinuousGyrocoloring;

/// `K5 ∪ K2[C5]`: vertices 0–4 are `K5`, then the two `C5` copies (5–9 and 10–14).
pub fn figure1_graph() -> Graph {
    let h = lexicographic(&complete(2).expect("K2"), &cycle(5).expect("C5"));
    disjoint_union(&complete(5).expect("K5"), &h)
}

/// The 40/7-gyrocolouring of `K5 ∪ K2[C5]`.
///
/// Base set `[0, 1/2) ∪ [15/14, 22/14)`; the `K5` vertices are rotated by 0, 1/2, 29/14,
/// 36/14 and 58/14; cycle position `p` of copy `c` gets `(8i + 4c)/7` with `i = 3p mod 5`,
/// so consecutive cycle vertices differ by 24/7.
pub fn figure1_certificate() -> ContinuousGyrocoloring {
    let base = vec![(int(0), ratio(1, 2)), (ratio(15, 14), ratio(22, 14))];
    let mut shifts: Vec<Rational> = vec![
        int(0),
        ratio(1, 2),
        ratio(29, 14),
        ratio(36, 14),
        ratio(58, 14),
    ];
    for copy in 0..2i64 {
        for p in 0..5i64 {
            let i = (3 * p) % 5;
            shifts.push(ratio(8 * i + 4 * copy, 7));
        }
    }
    ContinuousGyrocoloring::new(ratio(40, 7), base, shifts)
        .expect("built-in gyrocolouring is well formed")
}

/// `A = {(0,0),(0,1),(1,0),(1,1)}` and `f = identity` over `Z_5 × Z_5` for `G_5`.
pub fn g5_certificate() -> BaseCertificate {
    let group = AbelianGroup::new(vec![5, 5]).expect("Z5 x Z5");
    let a = [[0, 0], [0, 1], [1, 0], [1, 1]]
        .iter()
        .map(|r| GroupElement::new(r.to_vec()))
        .collect();
    BaseCertificate::new(g5().label(), group.clone(), a, group.elements().collect())
        .expect("well-formed certificate")
}
