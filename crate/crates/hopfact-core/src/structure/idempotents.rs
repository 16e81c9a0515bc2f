//! Primitive central idempotents defined over the rationals, obtained by
//! splitting the center along factored minimal polynomials.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{factor_poly, vecops, Matrix, Polynomial, Scalar, Subspace};
use crate::hopf::{Element, HopfAlgebra};

/// The primitive idempotents of the center that are defined over the
/// rationals, summing to 1, in a canonical (coordinate-lexicographic) order.
pub fn rational_central_idempotents(h: &HopfAlgebra) -> Result<Vec<Element>> {
    if !h.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let center = h.center();
    let mut queue: Vec<(Vec<Scalar>, Subspace)> = vec![(h.unit_vec().to_vec(), center)];
    let mut primitive: Vec<Vec<Scalar>> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    while let Some((e, w)) = queue.pop() {
        let m = w.dim();
        if m == 1 {
            primitive.push(e);
            continue;
        }
        let rows = w.basis_rows();
        let mut split = None;
        // Basis elements first, then deterministic pseudo-random combinations,
        // until a component element either splits W or certifies it a field.
        'candidates: for attempt in 0..(m + 200) {
            let z = if attempt < m {
                rows[attempt].clone()
            } else {
                let mut z = vecops::zero(h.dim());
                for r in &rows {
                    let c = Scalar::from_int(rng.gen_range(1..=16));
                    vecops::add_scaled(&mut z, r, &c);
                }
                z
            };
            // Restrict multiplication by z to W.
            let mut op = Matrix::zeros(m, m);
            for (j, r) in rows.iter().enumerate() {
                let prod = h.mul_vec(&z, r);
                let coords = w.coordinates(&prod).ok_or_else(|| {
                    Error::Structure("central component is not multiplicatively closed".into())
                })?;
                for (i, c) in coords.into_iter().enumerate() {
                    op[(i, j)] = c;
                }
            }
            let min_poly = op.min_poly();
            let factors = factor_poly(&min_poly);
            if factors.iter().any(|(_, mult)| *mult > 1) {
                return Err(Error::Structure(
                    "central minimal polynomial is not squarefree; input is not semisimple".into(),
                ));
            }
            if factors.len() == 1 {
                if min_poly.degree() == m {
                    // Irreducible of full degree: W is a field, e is primitive.
                    split = Some(Vec::new());
                    break 'candidates;
                }
                continue; // z does not separate; try the next candidate
            }
            // CRT idempotents along the distinct irreducible factors.
            let e_in_w = w
                .coordinates(&e)
                .ok_or_else(|| Error::Structure("component unit left its component".into()))?;
            let mut pieces = Vec::new();
            for (f_i, _) in &factors {
                let cofactor = min_poly.div_rem(f_i).0;
                let inv = poly_inverse_mod(&cofactor, f_i).ok_or_else(|| {
                    Error::Structure("cofactor not invertible modulo an irreducible factor".into())
                })?;
                let g_i = (&cofactor * &inv).rem(&min_poly);
                let e_i_coords = op.poly_eval(&g_i).apply(&e_in_w);
                let e_i = w.embed(&e_i_coords);
                pieces.push(e_i);
            }
            split = Some(pieces);
            break 'candidates;
        }
        match split {
            Some(pieces) if pieces.is_empty() => primitive.push(e),
            Some(pieces) => {
                // Cross-check: orthogonal idempotents summing to e.
                let mut total = vecops::zero(h.dim());
                for p in &pieces {
                    vecops::add_scaled(&mut total, p, &Scalar::one());
                    if h.mul_vec(p, p) != *p {
                        return Err(Error::Structure("central split piece not idempotent".into()));
                    }
                }
                if total != e {
                    return Err(Error::Structure("central split does not sum to e".into()));
                }
                for (i, p) in pieces.iter().enumerate() {
                    for q in pieces.iter().skip(i + 1) {
                        if !vecops::is_zero(&h.mul_vec(p, q)) {
                            return Err(Error::Structure("central split pieces not orthogonal".into()));
                        }
                    }
                }
                for p in pieces {
                    let mut sub_rows = Vec::with_capacity(rows.len());
                    for r in &rows {
                        sub_rows.push(h.mul_vec(&p, r));
                    }
                    let sub = Subspace::from_vectors(h.dim(), &sub_rows);
                    queue.push((p, sub));
                }
            }
            None => {
                return Err(Error::Structure(
                    "no separating central element found; input is not semisimple".into(),
                ))
            }
        }
    }
    primitive.sort();
    // Global sanity: the pieces sum to 1.
    let mut total = vecops::zero(h.dim());
    for p in &primitive {
        vecops::add_scaled(&mut total, p, &Scalar::one());
    }
    if total != h.unit_vec() {
        return Err(Error::Structure("central idempotents do not sum to 1".into()));
    }
    Ok(primitive.into_iter().map(Element).collect())
}

/// Inverse of `a` modulo `m` in Q[x], when gcd(a, m) = 1.
fn poly_inverse_mod(a: &Polynomial, m: &Polynomial) -> Option<Polynomial> {
    // Extended Euclid.
    let (mut r0, mut r1) = (m.clone(), a.rem(m));
    let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.degree() != 0 || r0.is_zero() {
        return None;
    }
    let inv_lead = r0.coeff(0).inv();
    Some(Polynomial::new(
        t0.coeffs().iter().map(|c| c * &inv_lead).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, group_algebra, symmetric3};

    #[test]
    fn idempotents_of_kc2() {
        let h = group_algebra(&cyclic(2));
        let idems = rational_central_idempotents(&h).unwrap();
        assert_eq!(idems.len(), 2);
        let half = Scalar::ratio(1, 2);
        let expected = vec![
            vec![half.clone(), -half.clone()],
            vec![half.clone(), half],
        ];
        let got: Vec<Vec<Scalar>> = idems.iter().map(|e| e.coords().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn idempotents_of_kc3_respect_rational_splitting() {
        // x³ − 1 = (x − 1)(x² + x + 1) over Q: two components only.
        let h = group_algebra(&cyclic(3));
        let idems = rational_central_idempotents(&h).unwrap();
        assert_eq!(idems.len(), 2);
        let third = Scalar::ratio(1, 3);
        let avg = vec![third.clone(), third.clone(), third.clone()];
        assert!(idems.iter().any(|e| e.coords() == avg));
        // The complement (2 − g − g²)/3.
        let other = vec![
            Scalar::ratio(2, 3),
            Scalar::ratio(-1, 3),
            Scalar::ratio(-1, 3),
        ];
        assert!(idems.iter().any(|e| e.coords() == other));
    }

    #[test]
    fn idempotents_of_ks3_match_character_oracle() {
        // All characters of S3 are rational: three central primitive
        // idempotents e_χ = (χ(1)/|G|) Σ_g χ(g⁻¹) g, from the character
        // table computed independently.
        let s3 = symmetric3();
        let h = group_algebra(&s3);
        let idems = rational_central_idempotents(&h).unwrap();
        assert_eq!(idems.len(), 3);
        // Character table of S3 on (rotations r^k, reflections r^k s):
        // trivial: all 1; sign: +1 on rotations, −1 on reflections;
        // standard 2-dim: 2 at e, −1 at r, r², 0 on reflections.
        let trivial = |_g: usize| Scalar::one();
        let sign = |g: usize| if g < 3 { Scalar::one() } else { -Scalar::one() };
        let standard = |g: usize| match g {
            0 => Scalar::from_int(2),
            1 | 2 => Scalar::from_int(-1),
            _ => Scalar::zero(),
        };
        let degrees = [Scalar::one(), Scalar::one(), Scalar::from_int(2)];
        let chars: [&dyn Fn(usize) -> Scalar; 3] = [&trivial, &sign, &standard];
        for (deg, chi) in degrees.iter().zip(chars.iter()) {
            let mut e = vecops::zero(6);
            for g in 0..6 {
                e[g] = &(deg * &chi(s3.inv(g))) * &Scalar::ratio(1, 6);
            }
            assert!(
                idems.iter().any(|x| x.coords() == e),
                "missing idempotent for character of degree {deg}"
            );
        }
        // They sum to 1 and are orthogonal (checked internally, re-check one).
        let prod = h.mul_vec(&idems[0], &idems[1]);
        assert!(vecops::is_zero(&prod));
    }

    #[test]
    fn non_semisimple_is_rejected() {
        assert!(matches!(
            rational_central_idempotents(&crate::sweedler4()),
            Err(Error::NotSemisimple)
        ));
    }
}
