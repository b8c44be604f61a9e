//! Closed-form bicrossproduct for the two-dimensional solvable pair `x▷y = y`, `x◁y = 0`,
//! truncated at degree `n`: `k[x]°` (dual basis `f_a` of `x^a`) against `k[y]`.
//!
//! `f_a f_c = C(a+c, a) f_{a+c}`, `Δf_a = Σ f_b ⊗ f_{a-b}`, `S f_a = (-1)^a f_a`; the action
//! of `k[y]` on `k[x]°` is trivial and `∇(y^b) = Σ_j b^j y^b ⊗ f_j`, since `x^j ▷ y^b = b^j y^b`.
//! Basis index `a * (n + 1) + b` for `f_a ⊗ y^b`.

use homhopf_core::foundation::{int, LinComb, Scalar};
use num_traits::{One, Zero};

pub struct ClassicalTables {
    pub mult: Vec<Option<LinComb<usize>>>,
    pub unit: LinComb<usize>,
    pub comult: Vec<LinComb<(usize, usize)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<LinComb<usize>>,
}

fn binom(n: usize, k: usize) -> Scalar {
    let mut c = Scalar::one();
    for i in 0..k {
        c = c * int((n - i) as i64) / int((i + 1) as i64);
    }
    c
}

fn power(b: usize, j: usize) -> Scalar {
    let mut c = Scalar::one();
    for _ in 0..j {
        c *= int(b as i64);
    }
    c
}

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn classical_bicrossproduct(n: usize) -> ClassicalTables {
    let d = n + 1;
    let idx = |a: usize, b: usize| a * d + b;
    let dim = d * d;

    let mut mult = Vec::with_capacity(dim * dim);
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for e in 0..d {
                    if b + e > n {
                        mult.push(None);
                    } else if a + c > n {
                        mult.push(Some(LinComb::zero()));
                    } else {
                        mult.push(Some(LinComb::term(idx(a + c, b + e), binom(a + c, a))));
                    }
                }
            }
        }
    }

    // Δ(f_a ⊗ y^b) = Σ (f_{a1} ⊗ y^k) ⊗ (f_{a2} f_j ⊗ y^{b-k}) · C(b,k) k^j
    let mut comult = vec![LinComb::zero(); dim];
    for a in 0..d {
        for b in 0..d {
            let out = &mut comult[idx(a, b)];
            for a1 in 0..=a {
                let a2 = a - a1;
                for k in 0..=b {
                    for j in 0..d {
                        if a2 + j > n {
                            continue;
                        }
                        let c = binom(b, k) * power(k, j) * binom(a2 + j, j);
                        if !c.is_zero() {
                            out.add_term((idx(a1, k), idx(a2 + j, b - k)), c);
                        }
                    }
                }
            }
        }
    }

    let counit = (0..dim).map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() }).collect();

    // S(f_a ⊗ y^b) = Σ_j b^j (-1)^{a+b+j} C(a+j, a) f_{a+j} ⊗ y^b
    let mut antipode = vec![LinComb::zero(); dim];
    for a in 0..d {
        for b in 0..d {
            for j in 0..d {
                if a + j > n {
                    continue;
                }
                let c = power(b, j) * sign(a + b + j) * binom(a + j, a);
                antipode[idx(a, b)].add_term(idx(a + j, b), c);
            }
        }
    }

    ClassicalTables { mult, unit: LinComb::basis(0), comult, counit, antipode }
}
