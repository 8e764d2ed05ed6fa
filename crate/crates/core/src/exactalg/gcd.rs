//! Gcd in `Z[t, t⁻¹]`: Gauss content/primitive splitting plus the
//! subresultant remainder sequence over `Z[t]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::ZPoly;

/// Dense polynomial over `Z`, index = degree, no trailing zeros.
type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &Dense) -> usize {
    p.len() - 1
}

fn content(p: &Dense) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn divide_scalar(p: &Dense, c: &BigInt) -> Dense {
    p.iter().map(|a| a / c).collect()
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let db = degree(b);
    let lb = b[db].clone();
    let mut steps = (degree(a) + 1).saturating_sub(db);
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
        steps -= 1;
    }
    let scale = num_traits::pow(lb, steps);
    for c in r.iter_mut() {
        *c *= &scale;
    }
    r
}

/// Gcd of two nonzero primitive polynomials with nonzero constant terms.
fn subresultant_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut f, mut g) = if a.len() >= b.len() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut gcoef = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        let delta = degree(&f) - degree(&g);
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        let divisor = &gcoef * num_traits::pow(h.clone(), delta);
        f = g;
        g = divide_scalar(&r, &divisor);
        gcoef = f[degree(&f)].clone();
        // h <- gcoef^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(gcoef.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
    let c = content(&g);
    divide_scalar(&g, &c)
}

/// Normalizes a Laurent polynomial to the representative of its class modulo
/// `±t^k`: lowest exponent zero and positive constant term. Zero stays zero.
pub fn normalize_pm_tk(p: &ZPoly) -> ZPoly {
    match p.min_exp() {
        None => ZPoly::zero(),
        Some(lo) => {
            let q = p.shift(-lo);
            if q.lowest_coeff().is_some_and(|c| c.is_negative()) {
                -q
            } else {
                q
            }
        }
    }
}

/// Greatest common divisor in `Z[t, t⁻¹]`, normalized as by [`normalize_pm_tk`].
/// `gcd(0, 0) = 0`.
pub fn gcd_laurent(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize_pm_tk(b);
    }
    if b.is_zero() {
        return normalize_pm_tk(a);
    }
    let ca = a.content();
    let cb = b.content();
    let cont = ca.gcd(&cb);
    let (_, da) = a.primitive_part().split_t_power().expect("nonzero");
    let (_, db) = b.primitive_part().split_t_power().expect("nonzero");
    let g = subresultant_gcd(&da, &db);
    let g = ZPoly::from_dense(0, &g).scale(&cont);
    normalize_pm_tk(&g)
}
