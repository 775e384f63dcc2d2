//! Quadratic functors on presented abelian groups: tensor square, reduced
//! tensor square, exterior square, Whitehead's Γ and `- ⊗ Z/2`.
//!
//! Basis of `⊗²A`: `e_i ⊗ e_j` at index `i * k + j`.
//! Basis of `ΓA`: pairs `i <= j` in lexicographic order; `(i, i)` is `γ(e_i)` and
//! `(i, j)` is the bracket `[e_i, e_j] = γ(e_i + e_j) - γ(e_i) - γ(e_j)`.

use num_traits::Zero;

use crate::abelian::{AbElem, AbMap, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{int, zeros, Int, IntMatrix};

pub fn tensor_index(k: usize, i: usize, j: usize) -> usize {
    i * k + j
}

/// Coordinates of `x ⊗ y` in `⊗²` of a group with `k` generators.
pub fn tensor(x: &[Int], y: &[Int]) -> AbElem {
    let k = x.len();
    let mut out = zeros(k * k);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out[i * k + j] += xi * yj;
            }
        }
    }
    out
}

pub fn tensor_square(a: &FinAbGroup) -> FinAbGroup {
    let k = a.ngens();
    let mut rows = Vec::new();
    for r in a.relations().row_vecs() {
        for j in 0..k {
            let e = a.gen(j);
            rows.push(tensor(&r, &e));
            rows.push(tensor(&e, &r));
        }
    }
    FinAbGroup::from_relation_rows(k * k, rows)
}

fn swap_matrix(k: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(k * k, k * k);
    for i in 0..k {
        for j in 0..k {
            m[(j * k + i, i * k + j)] = int(1);
        }
    }
    m
}

/// The involution `T(x ⊗ y) = y ⊗ x`.
pub fn swap(a: &FinAbGroup) -> AbMap {
    let t = tensor_square(a);
    AbMap::new_unchecked(t.clone(), t, swap_matrix(a.ngens()))
}

/// `1 + T` on `⊗²A`.
pub fn symmetrizer(a: &FinAbGroup) -> AbMap {
    let t = swap(a);
    t.add(&AbMap::identity(&t.source))
}

pub fn tensor_square_map(f: &AbMap) -> AbMap {
    AbMap::new_unchecked(tensor_square(&f.source), tensor_square(&f.target), f.matrix.kron(&f.matrix))
}

/// `⊗̂²A`, the cokernel of `1 + T`, presented on the same generators as `⊗²A`.
pub fn reduced_tensor_square(a: &FinAbGroup) -> FinAbGroup {
    symmetrizer(a).cokernel().0
}

/// The projection `σ̄ : ⊗²A → ⊗̂²A`.
pub fn sigma_bar(a: &FinAbGroup) -> AbMap {
    symmetrizer(a).cokernel().1
}

pub fn reduced_tensor_square_map(f: &AbMap) -> AbMap {
    AbMap::new_unchecked(
        reduced_tensor_square(&f.source),
        reduced_tensor_square(&f.target),
        f.matrix.kron(&f.matrix),
    )
}

/// `Λ²A = ⊗²A / (x ⊗ x)`, on the generators of `⊗²A`.
pub fn exterior_square(a: &FinAbGroup) -> FinAbGroup {
    let k = a.ngens();
    let mut extra = Vec::new();
    for i in 0..k {
        for j in i..k {
            let mut v = tensor(&a.gen(i), &a.gen(j));
            if i != j {
                v = crate::matrix::vec_add(&v, &tensor(&a.gen(j), &a.gen(i)));
            }
            extra.push(v);
        }
    }
    tensor_square(a).quotient(&extra).0
}

pub fn gamma_index(k: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // rows a < i contribute k - a pairs each
    i * k - i * i.saturating_sub(1) / 2 + (j - i)
}

pub fn gamma_rank(k: usize) -> usize {
    k * (k + 1) / 2
}

/// `[x, y]` in `Γ` of a group with `k` generators.
pub fn gamma_bracket(x: &[Int], y: &[Int]) -> AbElem {
    let k = x.len();
    let mut out = zeros(gamma_rank(k));
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            if i == j {
                out[gamma_index(k, i, i)] += c * 2;
            } else {
                out[gamma_index(k, i, j)] += c;
            }
        }
    }
    out
}

/// `γ(x)` for `x` in the free group on `k` generators.
pub fn gamma_of(x: &[Int]) -> AbElem {
    let k = x.len();
    let mut out = zeros(gamma_rank(k));
    for i in 0..k {
        if x[i].is_zero() {
            continue;
        }
        out[gamma_index(k, i, i)] += &x[i] * &x[i];
        for j in i + 1..k {
            if !x[j].is_zero() {
                out[gamma_index(k, i, j)] += &x[i] * &x[j];
            }
        }
    }
    out
}

/// Whitehead's `ΓA`, presented by the cross-effect formula on the presentation of `A`.
pub fn gamma(a: &FinAbGroup) -> FinAbGroup {
    let k = a.ngens();
    let mut rows = Vec::new();
    for r in a.relations().row_vecs() {
        rows.push(gamma_of(&r));
        for j in 0..k {
            rows.push(gamma_bracket(&r, &a.gen(j)));
        }
    }
    FinAbGroup::from_relation_rows(gamma_rank(k), rows)
}

/// The natural map `ΓA → ⊗²A`, `γ(x) ↦ x ⊗ x`.
pub fn gamma_to_tensor(a: &FinAbGroup) -> AbMap {
    let k = a.ngens();
    let mut cols = vec![Vec::new(); gamma_rank(k)];
    for i in 0..k {
        for j in i..k {
            let (ei, ej) = (a.gen(i), a.gen(j));
            let mut v = tensor(&ei, &ej);
            if i != j {
                v = crate::matrix::vec_add(&v, &tensor(&ej, &ei));
            }
            cols[gamma_index(k, i, j)] = v;
        }
    }
    AbMap::new_unchecked(gamma(a), tensor_square(a), IntMatrix::from_cols(k * k, cols))
}

pub fn gamma_map(f: &AbMap) -> AbMap {
    let k = f.source.ngens();
    let kt = f.target.ngens();
    let mut cols = vec![Vec::new(); gamma_rank(k)];
    for i in 0..k {
        let fi = f.matrix.col(i);
        cols[gamma_index(k, i, i)] = gamma_of(&fi);
        for j in i + 1..k {
            cols[gamma_index(k, i, j)] = gamma_bracket(&fi, &f.matrix.col(j));
        }
    }
    AbMap::new_unchecked(gamma(&f.source), gamma(&f.target), IntMatrix::from_cols(gamma_rank(kt), cols))
}

/// `A ⊗ Z/2` on the generators of `A`.
pub fn mod_two(a: &FinAbGroup) -> FinAbGroup {
    let twos: Vec<AbElem> = (0..a.ngens()).map(|i| crate::matrix::vec_scale(&a.gen(i), &int(2))).collect();
    a.quotient(&twos).0
}

pub fn mod_two_map(f: &AbMap) -> AbMap {
    AbMap::new_unchecked(mod_two(&f.source), mod_two(&f.target), f.matrix.clone())
}

/// `A ⊗ Z/2 → ⊗̂²A`, `x ↦ x ⊗̂ x`.
pub fn mod_two_to_reduced(a: &FinAbGroup) -> AbMap {
    let cols = (0..a.ngens()).map(|i| tensor(&a.gen(i), &a.gen(i))).collect();
    AbMap::new_unchecked(mod_two(a), reduced_tensor_square(a), IntMatrix::from_cols(a.ngens().pow(2), cols))
}

/// The stable range starts at `n = 3`; `n = 2` is the unstable case.
pub fn check_level(n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::Invalid(format!("quadratic functors need n >= 2, got {}", n)));
    }
    Ok(n >= 3)
}

/// `Γ_n A`: `ΓA` for `n = 2`, `A ⊗ Z/2` for `n >= 3`.
pub fn gamma_n(n: u32, a: &FinAbGroup) -> Result<FinAbGroup> {
    Ok(if check_level(n)? { mod_two(a) } else { gamma(a) })
}

/// `⊗²_n A`: `⊗²A` for `n = 2`, `⊗̂²A` for `n >= 3`.
pub fn tensor_square_n(n: u32, a: &FinAbGroup) -> Result<FinAbGroup> {
    Ok(if check_level(n)? { reduced_tensor_square(a) } else { tensor_square(a) })
}

pub fn gamma_n_map(n: u32, f: &AbMap) -> Result<AbMap> {
    Ok(if check_level(n)? { mod_two_map(f) } else { gamma_map(f) })
}

pub fn tensor_square_n_map(n: u32, f: &AbMap) -> Result<AbMap> {
    Ok(if check_level(n)? { reduced_tensor_square_map(f) } else { tensor_square_map(f) })
}

/// The inclusion `Γ_n A → ⊗²_n A`.
pub fn gamma_n_inclusion(n: u32, a: &FinAbGroup) -> Result<AbMap> {
    Ok(if check_level(n)? { mod_two_to_reduced(a) } else { gamma_to_tensor(a) })
}

/// `⊗²A → ⊗²_n A`: identity for `n = 2`, `σ̄` otherwise.
pub fn to_level(n: u32, a: &FinAbGroup) -> Result<AbMap> {
    Ok(if check_level(n)? { sigma_bar(a) } else { AbMap::identity(&tensor_square(a)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;

    #[test]
    fn gamma_index_enumerates_pairs_in_order() {
        for k in 0..6 {
            let mut idx = 0;
            for i in 0..k {
                for j in i..k {
                    assert_eq!(gamma_index(k, i, j), idx);
                    assert_eq!(gamma_index(k, j, i), idx);
                    idx += 1;
                }
            }
            assert_eq!(idx, gamma_rank(k));
        }
    }

    #[test]
    fn tensor_square_of_free_groups() {
        let t = tensor_square(&FinAbGroup::free(1));
        assert!(t.is_isomorphic(&FinAbGroup::free(1)));
        assert!(swap(&FinAbGroup::free(1)).equals(&AbMap::identity(&t)));
        let z2 = FinAbGroup::free(2);
        assert!(tensor_square(&z2).is_isomorphic(&FinAbGroup::free(4)));
        let s = swap(&z2);
        assert!(s.then(&s).equals(&AbMap::identity(&tensor_square(&z2))));
        assert_eq!(s.matrix.col(1), ints(&[0, 0, 1, 0]));
    }

    #[test]
    fn reduced_tensor_square_values() {
        assert!(reduced_tensor_square(&FinAbGroup::free(1)).is_isomorphic(&FinAbGroup::cyclic(2)));
        let r = reduced_tensor_square(&FinAbGroup::free(2));
        assert_eq!(r.describe(), "Z/2 + Z/2 + Z");
    }

    #[test]
    fn gamma_values() {
        assert!(gamma(&FinAbGroup::free(1)).is_isomorphic(&FinAbGroup::free(1)));
        assert!(gamma_to_tensor(&FinAbGroup::free(1)).is_iso());
        assert!(gamma(&FinAbGroup::free(2)).is_isomorphic(&FinAbGroup::free(3)));
        assert!(gamma(&FinAbGroup::cyclic(2)).is_isomorphic(&FinAbGroup::cyclic(4)));
        assert!(gamma(&FinAbGroup::cyclic(3)).is_isomorphic(&FinAbGroup::cyclic(3)));
    }

    #[test]
    fn leveled_functors() {
        let z = FinAbGroup::free(1);
        assert!(gamma_n(2, &z).unwrap().is_isomorphic(&z));
        assert!(tensor_square_n(2, &z).unwrap().is_isomorphic(&z));
        assert!(gamma_n(3, &z).unwrap().is_isomorphic(&FinAbGroup::cyclic(2)));
        assert!(tensor_square_n(3, &z).unwrap().is_isomorphic(&FinAbGroup::cyclic(2)));
        let z2 = FinAbGroup::free(2);
        assert_eq!(gamma_n(5, &z2).unwrap().describe(), "Z/2 + Z/2");
        assert_eq!(tensor_square_n(5, &z2).unwrap().describe(), "Z/2 + Z/2 + Z");
        assert!(gamma_n(1, &z).is_err());
    }

    #[test]
    fn gamma_inclusion_is_injective_on_free_groups() {
        for n in 2..5 {
            for k in 0..4 {
                let a = FinAbGroup::free(k);
                assert!(gamma_n_inclusion(n, &a).unwrap().is_injective(), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn sigma_bar_kills_symmetric_tensors() {
        let a = FinAbGroup::from_orders(&ints(&[2, 0, 6]));
        let comp = symmetrizer(&a).then(&sigma_bar(&a));
        assert!(comp.is_zero());
    }
}
