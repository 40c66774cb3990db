//! Exterior powers of `W = H^1 ⊕ H_1 L` on monomial bitmasks.
//!
//! With `h = h^1(Γ)`, bit `k < h` is the covector `x_k` (weight 0) and bit
//! `h + k` is the cycle `y_k` (weight 1). A monomial is the wedge of its
//! bits in increasing order.

use num_traits::Zero;

use crate::linalg::{rat, Matrix, SparseVec};

pub(crate) fn below(bit: usize) -> u64 {
    (1u64 << bit) - 1
}

/// Monomials of `∧^i W` with exactly `w` cycle factors, in increasing order.
pub(crate) fn block(h: usize, i: usize, w: usize) -> Vec<u64> {
    if w > i || w > h || i - w > h {
        return Vec::new();
    }
    let xs = subsets_of_size(h, i - w);
    let ys = subsets_of_size(h, w);
    let mut out: Vec<u64> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| x | (y << h)))
        .collect();
    out.sort_unstable();
    out
}

/// All monomials of `∧^i W`, in increasing order.
pub(crate) fn basis(h: usize, i: usize) -> Vec<u64> {
    let mut out: Vec<u64> = (0..=i).flat_map(|w| block(h, i, w)).collect();
    out.sort_unstable();
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for b in start..=n - k {
            go(n, k - 1, b + 1, cur | 1 << b, out);
        }
    }
    if k <= n {
        go(n, k, 0, 0, &mut out);
    }
    out
}

/// Replaces factor `s` of `mask` by `t`: the new monomial and its sign, or
/// `None` when `t` already occurs among the other factors.
pub(crate) fn replace(mask: u64, s: usize, t: usize) -> Option<(u64, bool)> {
    let rest = mask & !(1 << s);
    if rest >> t & 1 == 1 {
        return None;
    }
    let new = rest | 1 << t;
    let flips = (new & below(t)).count_ones() + (mask & below(s)).count_ones();
    Some((new, flips % 2 == 1))
}

/// The derivation extending `mat` (an endomorphism of `W`, columns indexed
/// by source bit) to a monomial.
pub(crate) fn derivation_on_monomial(mat: &Matrix, mask: u64) -> SparseVec {
    let mut out = SparseVec::new();
    let mut bits = mask;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        for t in 0..mat.rows() {
            let entry = mat.get(t, s);
            if entry.is_zero() {
                continue;
            }
            if let Some((new, negative)) = replace(mask, s, t) {
                out.add_term(new, if negative { -entry.clone() } else { entry.clone() });
            }
        }
    }
    out
}

/// `∧^i` of `mat` applied to a monomial: the wedge of the images of its
/// factors.
pub(crate) fn power_on_monomial(mat: &Matrix, mask: u64) -> SparseVec {
    let mut acc = SparseVec::unit(0);
    let mut bits = mask;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let column: SparseVec = (0..mat.rows())
            .filter(|&t| !mat.get(t, s).is_zero())
            .map(|t| (1u64 << t, mat.get(t, s).clone()))
            .collect();
        acc = wedge(&acc, &column);
    }
    acc
}

/// Wedge product of two sparse wedge vectors.
pub(crate) fn wedge(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            if ma & mb != 0 {
                continue;
            }
            // Sign of moving each factor of `mb` past the larger factors of `ma`.
            let mut flips = 0;
            let mut bits = mb;
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                flips += (ma & !below(t + 1)).count_ones();
            }
            let c = ca * cb;
            out.add_term(ma | mb, if flips % 2 == 1 { -c } else { c });
        }
    }
    out
}

/// Linear extension of `f` from monomials to vectors.
pub(crate) fn apply_linear(v: &SparseVec, f: impl Fn(u64) -> SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (m, c) in v.iter() {
        out.add_scaled(&f(m), c);
    }
    out
}

/// `N_f` on a monomial, where `c` holds the coordinates of the covector of
/// `f`: each cycle factor `y_j` becomes `c_j Σ_k c_k x_k`.
pub(crate) fn nilpotent_on_monomial(c: &[i64], mask: u64) -> SparseVec {
    let h = c.len();
    let mut out = SparseVec::new();
    for j in 0..h {
        if c[j] == 0 || mask >> (h + j) & 1 == 0 {
            continue;
        }
        for (k, &ck) in c.iter().enumerate() {
            if ck == 0 {
                continue;
            }
            if let Some((new, negative)) = replace(mask, h + j, k) {
                let v = c[j] * ck;
                out.add_term(new, rat(if negative { -v } else { v }));
            }
        }
    }
    out
}

pub(crate) fn unit_vectors(masks: &[u64]) -> Vec<SparseVec> {
    masks.iter().map(|&m| SparseVec::unit(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_sizes() {
        // h = 2: ∧^2 W has 6 monomials, split 1 + 4 + 1 by weight.
        assert_eq!(block(2, 2, 0).len(), 1);
        assert_eq!(block(2, 2, 1).len(), 4);
        assert_eq!(block(2, 2, 2).len(), 1);
        assert_eq!(basis(2, 2).len(), 6);
        assert_eq!(basis(1, 0), vec![0]);
    }

    #[test]
    fn replace_signs() {
        // x0 ^ y0 (bits 0, 1): replacing y0 by x0 collides.
        assert_eq!(replace(0b11, 1, 0), None);
        // x1 ^ y? with bits {1, 2}: replace bit 2 by bit 0 gives -(x0 ^ x1)
        // because x1 ^ x0 = -(x0 ^ x1).
        assert_eq!(replace(0b110, 2, 0), Some((0b011, true)));
        assert_eq!(replace(0b101, 2, 1), Some((0b011, false)));
    }

    #[test]
    fn wedge_is_anticommutative() {
        let a = SparseVec::unit(0b001);
        let b = SparseVec::unit(0b100);
        let ab = wedge(&a, &b);
        let ba = wedge(&b, &a);
        assert_eq!(ab.get(0b101), Some(&rat(1)));
        assert_eq!(ba.get(0b101), Some(&rat(-1)));
        assert!(wedge(&a, &a).is_zero());
    }

    #[test]
    fn power_matches_determinant() {
        // ∧^2 of a 2x2 matrix is its determinant.
        let m = Matrix::from_rows(vec![vec![rat(2), rat(3)], vec![rat(5), rat(7)]]);
        let v = power_on_monomial(&m, 0b11);
        assert_eq!(v.get(0b11), Some(&rat(2 * 7 - 3 * 5)));
    }

    #[test]
    fn derivation_agrees_with_nilpotent() {
        // h = 2 with covector c = (1, -1).
        let c = [1i64, -1];
        let mut m = Matrix::zeros(4, 4);
        for j in 0..2 {
            for k in 0..2 {
                m.set(k, 2 + j, rat(c[j] * c[k]));
            }
        }
        for mask in basis(2, 2).into_iter().chain(basis(2, 3)) {
            assert_eq!(derivation_on_monomial(&m, mask), nilpotent_on_monomial(&c, mask), "{mask:b}");
        }
    }
}
