//! Arithmetic in GF(p^m) for prime powers q = p^m <= 64.
//!
//! Elements are identified with integers in [0, q): the integer's base-p
//! digits are the coefficients of the polynomial representation, least
//! significant digit first. So over GF(4) = GF(2)[x]/(x^2+x+1) the
//! encoding is 0, 1, 2 = x, 3 = x+1, and over a prime field it is the
//! usual residue. Ordering of field elements always means this integer
//! encoding in ascending order.
//!
//! Each supported extension field uses one fixed primitive modulus (table
//! below). Construction builds the full power table of x and verifies that
//! the q-1 powers are distinct, nonzero and cycle back to 1; that check
//! proves the modulus irreducible and primitive, so a corrupted table entry
//! cannot produce a silently broken field.

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 64;

/// Fixed primitive moduli for the extension fields, one per order.
/// Digits are base-p coefficients, constant term first.
const EXTENSION_MODULI: &[(u32, &[u8])] = &[
    (4, &[1, 1, 1]),               // x^2 + x + 1
    (8, &[1, 1, 0, 1]),            // x^3 + x + 1
    (9, &[2, 1, 1]),               // x^2 + x + 2
    (16, &[1, 1, 0, 0, 1]),        // x^4 + x + 1
    (25, &[2, 1, 1]),              // x^2 + x + 2
    (27, &[1, 2, 0, 1]),           // x^3 + 2x + 1
    (32, &[1, 0, 1, 0, 0, 1]),     // x^5 + x^2 + 1
    (49, &[3, 1, 1]),              // x^2 + x + 3
    (64, &[1, 1, 0, 0, 0, 0, 1]),  // x^6 + x + 1
];

/// An element of a [`Field`], stored as its integer encoding.
///
/// Elements carry no back-reference to their field; all arithmetic goes
/// through the owning [`Field`], which validates nothing per call for
/// speed. Mixing elements across fields is a caller bug; `Matrix` guards
/// against it at its own boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^m) with all arithmetic precomputed into tables.
///
/// ```
/// use ghwmpc::gfield::Field;
/// let f4 = Field::new(2, 2).unwrap();
/// let a = f4.elem(2).unwrap();            // the class of x
/// assert_eq!(f4.mul(a, a).value(), 3);    // a * a = a + 1
/// assert_eq!(f4.inv(a).unwrap().value(), 3);
/// ```
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u8>,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    neg_t: Vec<u8>,
    inv_t: Vec<u8>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Field(q = {}^{})", self.p, self.m)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds GF(p^m). Fails on a non-prime p, m = 0, or p^m > [`MAX_ORDER`].
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("field characteristic {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Parse("field extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::Range(format!("field order {p}^{m} exceeds {MAX_ORDER}")))?;

        let modulus = if m == 1 {
            let g = smallest_primitive_root(p);
            vec![((p - g) % p) as u8, 1]
        } else {
            EXTENSION_MODULI
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, digits)| digits.to_vec())
                .ok_or_else(|| Error::Internal(format!("no modulus on record for order {q}")))?
        };

        // Generator of the multiplicative group: the primitive root for a
        // prime field, the class of x (encoding p) for an extension.
        let gen: Vec<u8> = if m == 1 {
            vec![p as u8 - modulus[0]]
        } else {
            digits_of(p, p, m)
        };

        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut cur = vec![0u8; m as usize];
        cur[0] = 1;
        for _ in 0..q - 1 {
            exp.push(undigits(&cur, p));
            cur = poly_mul_mod(&cur, &gen, &modulus, p, m);
        }
        // cur is now gen^(q-1); together with distinctness below this
        // certifies the modulus irreducible and the generator primitive.
        if undigits(&cur, p) != 1 {
            return Err(Error::Internal(format!(
                "generator of GF({q}) does not have order {}",
                q - 1
            )));
        }
        let mut log = vec![0u8; q as usize];
        let mut seen = vec![false; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            if v == 0 || seen[v as usize] {
                return Err(Error::Internal(format!(
                    "power table of GF({q}) is not a permutation of the nonzero elements"
                )));
            }
            seen[v as usize] = true;
            log[v as usize] = i as u8;
        }

        let qs = q as usize;
        let mut add_t = vec![0u8; qs * qs];
        let mut mul_t = vec![0u8; qs * qs];
        let mut neg_t = vec![0u8; qs];
        let mut inv_t = vec![0u8; qs];
        for a in 0..q {
            let da = digits_of(a, p, m);
            for b in 0..q {
                let db = digits_of(b, p, m);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as u32 + y as u32) % p) as u8)
                    .collect();
                add_t[(a * q + b) as usize] = undigits(&sum, p);
                mul_t[(a * q + b) as usize] = if a == 0 || b == 0 {
                    0
                } else {
                    let l = log[a as usize] as u32 + log[b as usize] as u32;
                    exp[(l % (q - 1)) as usize]
                };
            }
            let negd: Vec<u8> = da.iter().map(|&x| ((p - x as u32) % p) as u8).collect();
            neg_t[a as usize] = undigits(&negd, p);
            if a != 0 {
                let l = log[a as usize] as u32;
                inv_t[a as usize] = exp[((q - 1 - l) % (q - 1)) as usize];
            }
        }

        Ok(Field {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            add_t,
            mul_t,
            neg_t,
            inv_t,
        })
    }

    /// Builds the field of the given order, factoring it as a prime power.
    pub fn from_order(q: u32) -> Result<Field> {
        let (p, m) = factor_prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        Field::new(p, m)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus digits, constant term first. For m = 1 this is x - g with g
    /// the primitive root used for the discrete-log tables.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The element with the given integer encoding.
    pub fn elem(&self, v: u32) -> Result<FieldElement> {
        if v < self.q {
            Ok(FieldElement(v as u8))
        } else {
            Err(Error::Range(format!(
                "{v} is not an element encoding in a field of order {}",
                self.q
            )))
        }
    }

    /// Parses a possibly signed integer literal. Negative values are only
    /// meaningful over prime fields, where they reduce modulo p.
    pub fn elem_signed(&self, v: i64) -> Result<FieldElement> {
        if v < 0 {
            if self.m != 1 {
                return Err(Error::Parse(format!(
                    "negative literal {v} is only allowed over a prime field"
                )));
            }
            let p = self.p as i64;
            return Ok(FieldElement(v.rem_euclid(p) as u8));
        }
        if self.m == 1 {
            Ok(FieldElement((v as u64 % self.p as u64) as u8))
        } else {
            self.elem(u32::try_from(v).map_err(|_| {
                Error::Range(format!("literal {v} out of range for order {}", self.q))
            })?)
        }
    }

    /// All elements in canonical (ascending encoding) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|v| FieldElement(v as u8))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_t[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(self.inv_t[a.0 as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement(1);
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let l = self.log[a.0 as usize] as u64;
        let q1 = (self.q - 1) as u64;
        FieldElement(self.exp[(l * (e % q1) % q1) as usize])
    }

    // Raw-index arithmetic for enumeration inner loops. Callers guarantee
    // the operands are valid encodings for this field.
    #[inline]
    pub(crate) fn add_raw(&self, a: u8, b: u8) -> u8 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u8, b: u8) -> u8 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u8) -> u8 {
        self.neg_t[a as usize]
    }

    /// Raw inverse; the caller guarantees a != 0.
    #[inline]
    pub(crate) fn inv_raw(&self, a: u8) -> u8 {
        self.inv_t[a as usize]
    }

    /// Power table of the multiplicative generator; `exp_table()[i]` is g^i.
    pub fn exp_table(&self) -> &[u8] {
        &self.exp
    }

    /// Discrete log with respect to the generator; undefined at 0.
    pub fn log_of(&self, a: FieldElement) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.log[a.0 as usize] as u32)
    }
}

/// Splits q into (p, m) with p prime, or None.
pub fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rem = q;
            let mut m = 0;
            while rem.is_multiple_of(p) {
                rem /= p;
                m += 1;
            }
            return if rem == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    'outer: for g in 2..p {
        let mut v = 1u64;
        for i in 1..p {
            v = v * g as u64 % p as u64;
            if v == 1 {
                if i == p - 1 {
                    return g;
                }
                continue 'outer;
            }
        }
    }
    unreachable!("every prime has a primitive root");
}

fn digits_of(v: u32, p: u32, m: u32) -> Vec<u8> {
    let mut out = Vec::with_capacity(m as usize);
    let mut v = v;
    for _ in 0..m {
        out.push((v % p) as u8);
        v /= p;
    }
    out
}

fn undigits(digits: &[u8], p: u32) -> u8 {
    let mut v = 0u32;
    for &d in digits.iter().rev() {
        v = v * p + d as u32;
    }
    v as u8
}

/// Product of two degree-< m polynomials modulo the field modulus.
fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u32, m: u32) -> Vec<u8> {
    let m = m as usize;
    let mut prod = vec![0u32; 2 * m];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u32 * bj as u32) % p;
        }
    }
    // Reduce from the top: x^m = -(modulus without leading term).
    for i in (m..2 * m).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..m {
            let sub = c * modulus[j] as u32 % p;
            prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
        }
    }
    prod[..m].iter().map(|&d| d as u8).collect()
}
