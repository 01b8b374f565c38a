//! Dense complex linear algebra used by the representation-space code.
//!
//! Matrices are `ndarray::Array2<Complex64>` throughout. Multiplication is
//! written as a row-streaming kernel so the `parallel` feature can split
//! output rows across rayon workers; the sequential kernel is always compiled
//! and is what the public entry points fall back to when the feature is off.

use ndarray::{Array1, Array2, ArrayView2, Zip};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = Array2<C64>;

/// Identity matrix of dimension `n`.
pub fn identity(n: usize) -> CMat {
    Array2::from_diag(&Array1::from_elem(n, C64::new(1.0, 0.0)))
}

/// Conjugate transpose.
pub fn adjoint(a: &CMat) -> CMat {
    a.t().mapv(|z| z.conj())
}

fn matmul_kernel(a: ArrayView2<C64>, b: ArrayView2<C64>, out: &mut [C64], rows: std::ops::Range<usize>) {
    let n = b.ncols();
    let k = a.ncols();
    for (local, i) in rows.enumerate() {
        let acc = &mut out[local * n..(local + 1) * n];
        acc.fill(C64::new(0.0, 0.0));
        for l in 0..k {
            let s = a[[i, l]];
            if s.re == 0.0 && s.im == 0.0 {
                continue;
            }
            let brow = b.row(l);
            // contiguous axpy over the output row
            if let Some(bs) = brow.as_slice() {
                for (av, bv) in acc.iter_mut().zip(bs) {
                    *av += s * bv;
                }
            } else {
                for (av, bv) in acc.iter_mut().zip(brow.iter()) {
                    *av += s * bv;
                }
            }
        }
    }
}

/// Sequential matrix product.
pub fn matmul_seq(a: &CMat, b: &CMat) -> CMat {
    assert_eq!(a.ncols(), b.nrows(), "inner dimensions must agree");
    let (m, n) = (a.nrows(), b.ncols());
    let mut out = vec![C64::new(0.0, 0.0); m * n];
    matmul_kernel(a.view(), b.view(), &mut out, 0..m);
    Array2::from_shape_vec((m, n), out).expect("shape")
}

/// Row-parallel matrix product.
#[cfg(feature = "parallel")]
pub fn matmul_par(a: &CMat, b: &CMat) -> CMat {
    use rayon::prelude::*;
    assert_eq!(a.ncols(), b.nrows(), "inner dimensions must agree");
    let (m, n) = (a.nrows(), b.ncols());
    let mut out = vec![C64::new(0.0, 0.0); m * n];
    let chunk = (m / (4 * rayon::current_num_threads()).max(1)).max(8);
    out.par_chunks_mut(chunk * n)
        .enumerate()
        .for_each(|(ci, slab)| {
            let lo = ci * chunk;
            let hi = (lo + slab.len() / n).min(m);
            matmul_kernel(a.view(), b.view(), slab, lo..hi);
        });
    Array2::from_shape_vec((m, n), out).expect("shape")
}

/// Matrix product; parallel when the `parallel` feature is enabled.
pub fn matmul(a: &CMat, b: &CMat) -> CMat {
    #[cfg(feature = "parallel")]
    {
        matmul_par(a, b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        matmul_seq(a, b)
    }
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    &matmul(a, b) - &matmul(b, a)
}

/// Largest entry magnitude.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entry magnitude over the leading `(n - buffer) x (n - buffer)` block.
pub fn interior_max_abs(a: &CMat, buffer: usize) -> f64 {
    let m = a.nrows().saturating_sub(buffer);
    a.slice(ndarray::s![..m, ..m])
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Frobenius norm of the leading `dim x dim` block.
pub fn interior_fro_norm(a: &CMat, dim: usize) -> f64 {
    let d = dim.min(a.nrows());
    a.slice(ndarray::s![..d, ..d])
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// `||a - b||_F` over the leading `dim x dim` block.
pub fn interior_diff(a: &CMat, b: &CMat, dim: usize) -> f64 {
    let d = dim.min(a.nrows());
    Zip::from(a.slice(ndarray::s![..d, ..d]))
        .and(b.slice(ndarray::s![..d, ..d]))
        .fold(0.0, |acc, x, y| acc + (x - y).norm_sqr())
        .sqrt()
}

/// Deviation from unitarity `max |(U^H U - 1)_ij|` over the leading block.
pub fn unitarity_defect(u: &CMat, buffer: usize) -> f64 {
    let g = matmul(&adjoint(u), u);
    let n = g.nrows();
    let m = n.saturating_sub(buffer);
    let mut worst = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            worst = worst.max((g[[i, j]] - target).norm());
        }
    }
    worst
}

/// 1-norm (maximum column sum), used by the exponential scaling heuristic.
fn one_norm(a: &CMat) -> f64 {
    let mut best = 0.0f64;
    for j in 0..a.ncols() {
        let s: f64 = a.column(j).iter().map(|z| z.norm()).sum();
        best = best.max(s);
    }
    best
}

/// Matrix exponential by scaling and squaring with a degree-13 Pade
/// approximant. The diagonal approximant maps anti-Hermitian arguments to
/// unitary results, so propagators computed this way stay unitary to
/// rounding.
pub fn expm(a: &CMat) -> CMat {
    // Pade-13 coefficients.
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    const THETA_13: f64 = 5.371920351148152;

    let n = a.nrows();
    let norm = one_norm(a);
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as i32
    } else {
        0
    };
    let scale = C64::new(2f64.powi(-s), 0.0);
    let a1 = a.mapv(|z| z * scale);

    let a2 = matmul(&a1, &a1);
    let a4 = matmul(&a2, &a2);
    let a6 = matmul(&a2, &a4);
    let id = identity(n);

    let mut w1 = a6.mapv(|z| z * B[13]);
    w1 = &w1 + &a4.mapv(|z| z * B[11]);
    w1 = &w1 + &a2.mapv(|z| z * B[9]);
    let mut w2 = a6.mapv(|z| z * B[7]);
    w2 = &w2 + &a4.mapv(|z| z * B[5]);
    w2 = &w2 + &a2.mapv(|z| z * B[3]);
    w2 = &w2 + &id.mapv(|z| z * B[1]);
    let w = &matmul(&a6, &w1) + &w2;
    let u = matmul(&a1, &w);

    let mut z1 = a6.mapv(|z| z * B[12]);
    z1 = &z1 + &a4.mapv(|z| z * B[10]);
    z1 = &z1 + &a2.mapv(|z| z * B[8]);
    let mut z2 = a6.mapv(|z| z * B[6]);
    z2 = &z2 + &a4.mapv(|z| z * B[4]);
    z2 = &z2 + &a2.mapv(|z| z * B[2]);
    z2 = &z2 + &id.mapv(|z| z * B[0]);
    let v = &matmul(&a6, &z1) + &z2;

    // solve (v - u) x = (v + u)
    let rhs = &v + &u;
    let lhs = &v - &u;
    let mut x = solve_dense(&lhs, &rhs);
    for _ in 0..s {
        x = matmul(&x, &x);
    }
    x
}

/// Dense LU solve with partial pivoting for `a x = b` (b has many columns).
fn solve_dense(a: &CMat, b: &CMat) -> CMat {
    let n = a.nrows();
    let mut lu = a.clone();
    let mut x = b.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let mut p = k;
        let mut best = lu[[k, k]].norm();
        for i in (k + 1)..n {
            let v = lu[[i, k]].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 {
            // singular up to rounding; leave the row as is
            continue;
        }
        if p != k {
            perm.swap(p, k);
            for j in 0..n {
                let tmp = lu[[k, j]];
                lu[[k, j]] = lu[[p, j]];
                lu[[p, j]] = tmp;
            }
            for j in 0..x.ncols() {
                let tmp = x[[k, j]];
                x[[k, j]] = x[[p, j]];
                x[[p, j]] = tmp;
            }
        }
        let piv = lu[[k, k]];
        for i in (k + 1)..n {
            let f = lu[[i, k]] / piv;
            lu[[i, k]] = f;
            for j in (k + 1)..n {
                let v = lu[[k, j]];
                lu[[i, j]] -= f * v;
            }
            for j in 0..x.ncols() {
                let v = x[[k, j]];
                x[[i, j]] -= f * v;
            }
        }
    }
    // back substitution
    for j in 0..x.ncols() {
        for i in (0..n).rev() {
            let mut s = x[[i, j]];
            for l in (i + 1)..n {
                s -= lu[[i, l]] * x[[l, j]];
            }
            x[[i, j]] = s / lu[[i, i]];
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn randish(n: usize, seed: u64) -> CMat {
        // deterministic filler, no rng dependency needed here
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        Array2::from_shape_fn((n, n), |_| C64::new(next(), next()))
    }

    #[test]
    fn matmul_matches_reference() {
        let a = randish(17, 1);
        let b = randish(17, 2);
        let c = matmul_seq(&a, &b);
        // reference triple loop
        let mut r = Array2::from_elem((17, 17), C64::new(0.0, 0.0));
        for i in 0..17 {
            for j in 0..17 {
                for k in 0..17 {
                    r[[i, j]] += a[[i, k]] * b[[k, j]];
                }
            }
        }
        assert!(max_abs(&(&c - &r)) < 1e-13);
        #[cfg(feature = "parallel")]
        {
            let cp = matmul_par(&a, &b);
            assert!(max_abs(&(&cp - &c)) == 0.0, "parallel kernel must be bit-identical in summation order per row");
        }
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = Array2::from_elem((6, 6), C64::new(0.0, 0.0));
        let e = expm(&z);
        assert!(max_abs(&(&e - &identity(6))) < 1e-14);
    }

    #[test]
    fn expm_diagonal() {
        let mut d = Array2::from_elem((4, 4), C64::new(0.0, 0.0));
        for i in 0..4 {
            d[[i, i]] = C64::new(0.3 * i as f64, -0.2);
        }
        let e = expm(&d);
        for i in 0..4 {
            assert!((e[[i, i]] - d[[i, i]].exp()).norm() < 1e-14);
        }
    }

    #[test]
    fn expm_antihermitian_is_unitary() {
        let a = randish(24, 9);
        let ah = (&a - &adjoint(&a)).mapv(|z| z * C64::new(0.5, 0.0));
        let u = expm(&ah);
        assert!(unitarity_defect(&u, 0) < 1e-12);
    }

    #[test]
    fn expm_matches_series_small() {
        let a = randish(8, 5).mapv(|z| z * C64::new(0.05, 0.0));
        let e = expm(&a);
        // Taylor reference
        let mut term = identity(8);
        let mut sum = identity(8);
        for k in 1..30 {
            term = matmul(&term, &a).mapv(|z| z / C64::new(k as f64, 0.0));
            sum = &sum + &term;
        }
        assert!(max_abs(&(&e - &sum)) < 1e-13);
    }

    #[test]
    fn solve_dense_roundtrip() {
        let a = &randish(12, 3) + &identity(12).mapv(|z| z * C64::new(4.0, 0.0));
        let b = randish(12, 4);
        let x = solve_dense(&a, &b);
        assert!(max_abs(&(&matmul(&a, &x) - &b)) < 1e-11);
    }
}
