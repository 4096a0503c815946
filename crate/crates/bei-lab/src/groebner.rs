//! Buchberger's algorithm with the normal selection strategy and the
//! product/chain pair criteria, reduced bases, multivariate division,
//! ideal intersection by t-elimination, and exact ideal equality.

use std::sync::Arc;

use crate::poly::{PolyError, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|f| !f.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            generators,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: Arc<PolyRing>,
    pub basis: Vec<Polynomial>,
    pub reduced: bool,
}

/// Remainder of `f` on full division by `basis`: no term of the result is
/// divisible by any leading monomial of the basis.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring.clone();
    let mut rem = Polynomial::zero(&ring);
    let mut work = f.clone();
    'outer: while let Some((m, c)) = work.leading().cloned() {
        for g in basis {
            let Some((gm, gc)) = g.leading() else { continue };
            if let Some(q) = m.div(gm) {
                let factor = c * mod_inv(*gc, ring.modulus) % ring.modulus;
                work = work.sub(&g.mul_term(&q, factor));
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        rem.terms.push((m, c));
        work.terms.remove(0);
    }
    rem
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = &f.ring;
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let uf = l.div(fm).unwrap();
    let ug = l.div(gm).unwrap();
    let a = f.mul_term(&uf, mod_inv(*fc, ring.modulus));
    let b = g.mul_term(&ug, mod_inv(*gc, ring.modulus));
    a.sub(&b)
}

/// Reduced Gröbner basis of `i` under `i.ring.order`, deterministic for a
/// given generator order.
pub fn buchberger(i: &Ideal) -> Result<GroebnerBasis, PolyError> {
    let ring = i.ring.clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    for f in &i.generators {
        if f.ring != ring {
            return Err(PolyError::RingMismatch);
        }
        if !f.is_zero() {
            basis.push(f.monic());
        }
    }

    // Pair queue under the normal strategy: smallest lcm degree first, then
    // by index for determinism.
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let lcm_deg = |basis: &[Polynomial], a: usize, b: usize| -> u32 {
        basis[a]
            .leading_monomial()
            .unwrap()
            .lcm(basis[b].leading_monomial().unwrap())
            .degree()
    };
    for a in 0..basis.len() {
        for b in (a + 1)..basis.len() {
            pairs.push((lcm_deg(&basis, a, b), a, b));
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(d, a, b))| (d, a, b))
            .map(|(k, _)| k)
            .unwrap();
        let (_, a, b) = pairs.swap_remove(best);

        let fa = &basis[a];
        let fb = &basis[b];
        let ma = fa.leading_monomial().unwrap();
        let mb = fb.leading_monomial().unwrap();
        // Product criterion.
        if ma.is_coprime_with(mb) {
            continue;
        }
        // Chain criterion: a third basis element dividing the lcm whose
        // pairs with both ends are no longer pending.
        let l = ma.lcm(mb);
        let chained = (0..basis.len()).any(|k| {
            k != a
                && k != b
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pairs.iter().any(|&(_, x, y)| {
                    (x == k.min(a) && y == k.max(a)) || (x == k.min(b) && y == k.max(b))
                })
        });
        if chained {
            continue;
        }

        let rem = reduce(&s_polynomial(fa, fb), &basis);
        if rem.is_zero() {
            continue;
        }
        let rem = rem.monic();
        let new_idx = basis.len();
        basis.push(rem);
        for k in 0..new_idx {
            pairs.push((lcm_deg(&basis, k, new_idx), k, new_idx));
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a != b
                && keep[b]
                && basis[b]
                    .leading_monomial()
                    .unwrap()
                    .divides(basis[a].leading_monomial().unwrap())
                && (basis[a].leading_monomial() != basis[b].leading_monomial() || a > b)
            {
                keep[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(f, &k)| k.then_some(f))
        .collect();

    // Tail-reduce every element against the others.
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for a in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(b, g)| (b != a).then(|| g.clone()))
            .collect();
        reduced.push(reduce(&minimal[a], &others).monic());
    }
    reduced.retain(|f| !f.is_zero());
    reduced.sort_by(|f, g| {
        ring.cmp_monomials(g.leading_monomial().unwrap(), f.leading_monomial().unwrap())
    });

    Ok(GroebnerBasis {
        ring,
        basis: reduced,
        reduced: true,
    })
}

/// Remainder of `f` modulo the basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    if f.ring != gb.ring {
        return Err(PolyError::RingMismatch);
    }
    Ok(reduce(f, &gb.basis))
}

pub fn in_ideal(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool, PolyError> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// I ∩ J via the auxiliary variable: generators of (t·I, (1−t)·J) free of t
/// under an order eliminating t.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, PolyError> {
    if i.ring != j.ring {
        return Err(PolyError::RingMismatch);
    }
    let base = i.ring.clone();
    if base.has_t {
        return Err(PolyError::RingMismatch);
    }
    let rt = base.with_t();
    let t = Polynomial::variable(&rt, rt.t_index().unwrap());
    let one_minus_t = Polynomial::constant(&rt, 1).sub(&t);

    let mut gens = Vec::new();
    for f in &i.generators {
        gens.push(t.mul(&f.map_to_ring(&rt)?));
    }
    for g in &j.generators {
        gens.push(one_minus_t.mul(&g.map_to_ring(&rt)?));
    }
    let gb = buchberger(&Ideal::new(&rt, gens))?;

    let mut out = Vec::new();
    for f in gb.basis {
        if f.terms.iter().all(|(m, _)| m.0[0] == 0) {
            out.push(f.map_to_ring(&base)?);
        }
    }
    Ok(Ideal::new(&base, out))
}

/// Exact ideal equality by mutual generator membership.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool, PolyError> {
    if i.ring != j.ring {
        return Err(PolyError::RingMismatch);
    }
    let gi = buchberger(i)?;
    let gj = buchberger(j)?;
    for f in &i.generators {
        if !in_ideal(f, &gj)? {
            return Ok(false);
        }
    }
    for g in &j.generators {
        if !in_ideal(g, &gi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ideal sum (concatenated generators).
pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal, PolyError> {
    if i.ring != j.ring {
        return Err(PolyError::RingMismatch);
    }
    let mut gens = i.generators.clone();
    gens.extend(j.generators.iter().cloned());
    Ok(Ideal::new(&i.ring, gens))
}
