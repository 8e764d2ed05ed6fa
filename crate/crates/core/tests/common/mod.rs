//! Oracles and random generators shared by the integration tests. Nothing
//! here calls into the library's determinant, torsion or series code; the
//! library is only used for polynomial arithmetic and for packaging results.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torsion_lab::complexes::{BasedComplex, Direction};
use torsion_lab::exactalg::{normalize_unit_class, Ambiguity, RationalFunction, UnitClass, ZPoly};
use torsion_lab::matrices::Matrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn z(s: &str) -> ZPoly {
    s.parse().unwrap()
}

pub fn class(f: &RationalFunction) -> UnitClass {
    normalize_unit_class(f, Ambiguity::PlusMinusTk).unwrap()
}

pub fn frac(num: &ZPoly, den: &ZPoly) -> RationalFunction {
    RationalFunction::new(num, den).unwrap()
}

/// Random polynomial with exponents in `lo..=hi` and coefficients in
/// `-c..=c`; may be zero.
pub fn poly(rng: &mut impl Rng, lo: i64, hi: i64, c: i64) -> ZPoly {
    ZPoly::from_terms((lo..=hi).map(|e| (e, BigInt::from(rng.gen_range(-c..=c)))))
}

pub fn nonzero_poly(rng: &mut impl Rng, lo: i64, hi: i64, c: i64) -> ZPoly {
    loop {
        let p = poly(rng, lo, hi, c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn int_matrix(rng: &mut impl Rng, n: usize, c: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-c..=c)).collect()).collect()
}

pub fn to_matrix(rows: &[Vec<ZPoly>], cols: usize) -> Matrix<ZPoly> {
    Matrix::from_rows(rows.to_vec(), cols).unwrap()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::one();
    }
    let mut acc = ZPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ZPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

pub fn rows_of(m: &Matrix<ZPoly>) -> Vec<Vec<ZPoly>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// `det(1 - tA)` for an integer matrix.
pub fn det_one_minus_t(a: &[Vec<i64>]) -> ZPoly {
    let n = a.len();
    let rows: Vec<Vec<ZPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { ZPoly::one() } else { ZPoly::zero() };
                    &diag - &ZPoly::monomial(1, BigInt::from(a[i][j]))
                })
                .collect()
        })
        .collect();
    cofactor_det(&rows)
}

/// `tr(A^k)` for `k = 1..=n`.
pub fn power_traces(a: &[Vec<i64>], n: usize) -> Vec<BigInt> {
    let dim = a.len();
    let a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut p = a.clone();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push((0..dim).map(|i| p[i][i].clone()).sum());
        p = (0..dim)
            .map(|i| (0..dim).map(|j| (0..dim).map(|k| &p[i][k] * &a[k][j]).sum()).collect())
            .collect();
    }
    out
}

/// Coefficients `0..n` of `∏ (1 - t^k)^{-ε}` by repeated convolution.
pub fn orbit_product_coeffs(orbits: &[(u32, i64)], n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); n];
    c[0] = 1.into();
    for &(k, sign) in orbits {
        let k = k as usize;
        if sign > 0 {
            // multiply by 1/(1 - t^k): running sums with stride k
            for e in k..n {
                let prev = c[e - k].clone();
                c[e] += prev;
            }
        } else {
            for e in (k..n).rev() {
                let prev = c[e - k].clone();
                c[e] -= prev;
            }
        }
    }
    c
}

// ---------------------------------------------------------------------------
// Fox calculus

/// A word in the free group: `(generator, ±1)` letters.
pub type Word = Vec<(usize, i32)>;

/// Parses a word over single-letter generators; an uppercase letter is the
/// inverse of its lowercase generator.
pub fn word(s: &str, gens: &str) -> Word {
    s.chars()
        .map(|ch| {
            let g = gens.find(ch.to_ascii_lowercase()).expect("known generator");
            (g, if ch.is_ascii_uppercase() { -1 } else { 1 })
        })
        .collect()
}

/// `φ(∂w/∂x_j)` where `φ(x_i) = t^{phi[i]}`:
/// `∂(uv) = ∂u + u ∂v`, `∂x_j/∂x_j = 1`, `∂x_j⁻¹/∂x_j = -x_j⁻¹`.
pub fn fox_derivative(w: &Word, j: usize, phi: &[i64]) -> ZPoly {
    let mut acc = ZPoly::zero();
    let mut prefix = 0i64;
    for &(g, e) in w {
        if g == j {
            if e > 0 {
                acc = &acc + &ZPoly::monomial(prefix, 1.into());
            } else {
                acc = &acc - &ZPoly::monomial(prefix - phi[g], 1.into());
            }
        }
        prefix += i64::from(e) * phi[g];
    }
    acc
}

/// Entry `(j, r)` is `φ(∂r/∂x_j)`: the boundary from relator 2-cells to
/// generator 1-cells of the cyclic cover.
pub fn fox_jacobian(relators: &[Word], phi: &[i64]) -> Vec<Vec<ZPoly>> {
    (0..phi.len()).map(|j| relators.iter().map(|r| fox_derivative(r, j, phi)).collect()).collect()
}

/// Alexander polynomial of a knot from a deficiency-one presentation: the
/// Jacobian minor without generator `drop`. This is `Δ` up to units when
/// `x_drop` is a meridian.
pub fn alexander_polynomial(relators: &[Word], phi: &[i64], drop: usize) -> ZPoly {
    let j = fox_jacobian(relators, phi);
    let rows: Vec<Vec<ZPoly>> = j.into_iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, r)| r).collect();
    cofactor_det(&rows)
}

// ---------------------------------------------------------------------------
// Mapping tori

/// A finite CW structure on a fiber with integer cellular boundaries
/// `boundary[k]: F_{k+1} → F_k` and a cellular self-map `monodromy[k]` on
/// `F_k`.
pub struct Fiber {
    pub ranks: Vec<usize>,
    pub boundary: Vec<Vec<Vec<i64>>>,
    pub monodromy: Vec<Vec<Vec<i64>>>,
}

impl Fiber {
    pub fn sphere(dim: usize) -> Self {
        let mut ranks = vec![0; dim + 1];
        ranks[0] = 1;
        ranks[dim] = 1;
        let boundary = (0..dim).map(|k| vec![vec![0; ranks[k + 1]]; ranks[k]]).collect();
        let monodromy = ranks.iter().map(|&r| identity(r)).collect();
        Self { ranks, boundary, monodromy }
    }

    /// The torus with one cell in degrees 0 and 2, two in degree 1, and a
    /// map acting by `m` on the 1-cells.
    pub fn torus(m: [[i64; 2]; 2]) -> Self {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Self {
            ranks: vec![1, 2, 1],
            boundary: vec![vec![vec![0, 0]], vec![vec![0], vec![0]]],
            monodromy: vec![vec![vec![1]], m.iter().map(|r| r.to_vec()).collect(), vec![vec![det]]],
        }
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Cyclic-cover chain complex of the mapping torus: `C_k = F_k ⊕ F_{k-1}`
/// (cells `e` and `e × I`) with `∂e = ∂_F e` and
/// `∂(e × I) = (-1)^{dim e} (t f(e) - e) + (∂_F e) × I`.
pub fn mapping_torus(f: &Fiber) -> BasedComplex {
    let d = f.ranks.len() - 1;
    let rank = |k: isize| -> usize {
        if k < 0 || k as usize > d {
            0
        } else {
            f.ranks[k as usize]
        }
    };
    let ranks: Vec<usize> = (0..=d + 1).map(|k| rank(k as isize) + rank(k as isize - 1)).collect();
    let mut differentials = Vec::with_capacity(d + 1);
    for k in 1..=d + 1 {
        // rows: F_{k-1} ⊕ F_{k-2}; cols: F_k ⊕ F_{k-1}
        let (a, b) = (rank(k as isize - 1), rank(k as isize - 2));
        let (c, e) = (rank(k as isize), rank(k as isize - 1));
        let mut m = vec![vec![ZPoly::zero(); c + e]; a + b];
        for i in 0..a {
            for j in 0..c {
                m[i][j] = ZPoly::constant(f.boundary[k - 1][i][j].into());
            }
        }
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        for i in 0..a {
            for j in 0..e {
                let tf = ZPoly::monomial(1, BigInt::from(sign * f.monodromy[k - 1][i][j]));
                let id = ZPoly::constant(BigInt::from(if i == j { sign } else { 0 }));
                m[i][c + j] = &tf - &id;
            }
        }
        for i in 0..b {
            for j in 0..e {
                m[a + i][c + j] = ZPoly::constant(f.boundary[k - 2][i][j].into());
            }
        }
        differentials.push(to_matrix(&m, c + e));
    }
    BasedComplex::new(Direction::Down, ranks, differentials, None).unwrap()
}

/// `∏_k det(1 - t f_k)^{(-1)^{k+1}}`.
pub fn mapping_torus_torsion(f: &Fiber) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for (k, m) in f.monodromy.iter().enumerate() {
        let d = RationalFunction::from_poly(&det_one_minus_t(m));
        acc = if k % 2 == 1 { &acc * &d } else { &acc / &d };
    }
    acc
}

// ---------------------------------------------------------------------------
// Random complexes

/// A matrix over `Z[t, t⁻¹]` with determinant `±t^k`, and its inverse.
pub fn unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> (Matrix<ZPoly>, Matrix<ZPoly>) {
    let mut g: Matrix<ZPoly> = Matrix::identity(n);
    let mut g_inv: Matrix<ZPoly> = Matrix::identity(n);
    if n == 0 {
        return (g, g_inv);
    }
    for _ in 0..steps {
        let (e, e_inv) = match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let c = ZPoly::monomial(rng.gen_range(-1..=1), BigInt::from(*[-2, -1, 1, 2].choose(rng).unwrap()));
                let mut e = Matrix::identity(n);
                let mut e_inv = Matrix::identity(n);
                e[(i, j)] = c.clone();
                e_inv[(i, j)] = -c;
                (e, e_inv)
            }
            1 => {
                let i = rng.gen_range(0..n);
                let k = rng.gen_range(-2..=2);
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let mut e = Matrix::identity(n);
                let mut e_inv = Matrix::identity(n);
                e[(i, i)] = ZPoly::monomial(k, s.into());
                e_inv[(i, i)] = ZPoly::monomial(-k, s.into());
                (e, e_inv)
            }
            _ => {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                let e = Matrix::from_fn(n, n, |i, j| if perm[i] == j { ZPoly::one() } else { ZPoly::zero() });
                let e_inv = e.transpose();
                (e, e_inv)
            }
        };
        g = e.mul(&g).unwrap();
        g_inv = g_inv.mul(&e_inv).unwrap();
    }
    (g, g_inv)
}

/// A random complex acyclic over `Q(t)`, together with its torsion computed
/// from the construction.
pub struct RandomComplex {
    pub complex: BasedComplex,
    pub expected: RationalFunction,
}

/// Direct sum of elementary pieces `R --p--> R` between adjacent degrees,
/// conjugated by random unimodular basis changes. Ranks stay at most
/// `max_rank`; each `p` has degree at most `max_deg`, and some are units so
/// that the homology is not all of the complex.
pub fn random_acyclic(rng: &mut impl Rng, max_len: usize, max_rank: usize, max_deg: i64) -> RandomComplex {
    let direction = if rng.gen_bool(0.5) { Direction::Up } else { Direction::Down };
    let m = rng.gen_range(1..max_len);
    let mut ranks = vec![0usize; m + 1];
    // pieces[i] = the polynomials joining degrees i and i+1
    let mut pieces: Vec<Vec<ZPoly>> = vec![Vec::new(); m];
    for i in 0..m {
        let room = max_rank - ranks[i].max(ranks[i + 1]);
        let count = rng.gen_range(0..=room.min(2));
        for _ in 0..count {
            let p = if rng.gen_bool(0.25) {
                ZPoly::monomial(rng.gen_range(-1..=1), BigInt::from(*[-1, 1].choose(rng).unwrap()))
            } else {
                nonzero_poly(rng, 0, max_deg, 3)
            };
            pieces[i].push(p);
            ranks[i] += 1;
            ranks[i + 1] += 1;
        }
    }
    let mut expected = RationalFunction::one();
    let mut next = vec![0usize; m + 1];
    let mut ds: Vec<Matrix<ZPoly>> = (0..m)
        .map(|i| match direction {
            Direction::Up => Matrix::zeros(ranks[i + 1], ranks[i]),
            Direction::Down => Matrix::zeros(ranks[i], ranks[i + 1]),
        })
        .collect();
    for i in 0..m {
        for p in &pieces[i] {
            let (lo, hi) = (next[i], next[i + 1]);
            next[i] += 1;
            next[i + 1] += 1;
            let f = RationalFunction::from_poly(p);
            // the unit vector is chosen at one end and p lands at the other
            let positive = match direction {
                Direction::Up => {
                    ds[i][(hi, lo)] = p.clone();
                    (i + 1) % 2 == 0
                }
                Direction::Down => {
                    ds[i][(lo, hi)] = p.clone();
                    (m - i) % 2 == 0
                }
            };
            expected = if positive { &expected * &f } else { &expected / &f };
        }
    }
    let base = BasedComplex::new(direction, ranks.clone(), ds, None).unwrap();
    let (g, g_inv): (Vec<_>, Vec<_>) = ranks.iter().map(|&r| unimodular(rng, r, 3)).unzip();
    RandomComplex {
        complex: base.change_basis(&g, &g_inv).unwrap(),
        expected,
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
