//! Arithmetic tables for GF(q), q = p^e <= 64.
//!
//! Elements are integers in `0..q`, read as base-`p` digit vectors of
//! polynomial coefficients (digit i = coefficient of x^i). Extension
//! fields reduce by a fixed irreducible polynomial from the table below.

use crate::error::FieldError;

/// `(q, p, e, reduction)` where `reduction` encodes `x^e` as an element,
/// i.e. the residue of x^e modulo the chosen irreducible polynomial.
/// Polynomials: x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1 over GF(2);
/// x^2+1, x^3+2x+1 over GF(3); x^2+2 over GF(5); x^2+1 over GF(7).
/// See Lidl & Niederreiter, "Finite Fields", table of irreducible polynomials.
const EXTENSIONS: &[(usize, usize, usize, usize)] = &[
    (4, 2, 2, 0b11),      // x^2 = x + 1
    (8, 2, 3, 0b011),     // x^3 = x + 1
    (16, 2, 4, 0b0011),   // x^4 = x + 1
    (32, 2, 5, 0b00101),  // x^5 = x^2 + 1
    (64, 2, 6, 0b000011), // x^6 = x + 1
    (9, 3, 2, 2),         // x^2 = 2
    (27, 3, 3, 5),        // x^3 = x + 2  (digits [2,1] base 3)
    (25, 5, 2, 3),        // x^2 = 3
    (49, 7, 2, 6),        // x^2 = 6
];

fn prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Addition/multiplication tables for GF(q) plus a generator of the
/// multiplicative group.
pub struct PrimePowerField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    generator: usize,
}

impl PrimePowerField {
    pub fn new(q: usize) -> Result<Self, FieldError> {
        let (p, deg, reduction) = if prime(q) {
            (q, 1, 0)
        } else if let Some(&(_, p, e, r)) = EXTENSIONS.iter().find(|&&(qq, ..)| qq == q) {
            (p, e, r)
        } else {
            return Err(FieldError::UnsupportedOrder(q));
        };

        let digits = |mut v: usize| -> Vec<usize> {
            let mut d = Vec::new();
            while v > 0 {
                d.push(v % p);
                v /= p;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a);
                let db = digits(b);
                // addition: digitwise mod p
                let mut ds = vec![0usize; deg + 1];
                for (i, d) in ds.iter_mut().enumerate() {
                    let x = da.get(i).copied().unwrap_or(0);
                    let y = db.get(i).copied().unwrap_or(0);
                    *d = (x + y) % p;
                }
                add[a * q + b] = undigits(&ds) as u8;

                // multiplication: convolve, then reduce x^deg -> reduction
                let mut prod = vec![0usize; 2 * deg + 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let red = digits(reduction);
                for i in (deg..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &r) in red.iter().enumerate() {
                        prod[i - deg + j] = (prod[i - deg + j] + c * r) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..deg]) as u8;
            }
        }

        let mut field = PrimePowerField {
            q,
            add,
            mul,
            generator: 0,
        };
        field.generator = (1..q)
            .find(|&g| field.order(g) == q - 1)
            .expect("multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut acc = 1;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0; // not invertible
            }
        }
        k
    }

    /// The multiplicative subgroup of order `t`; requires `t | q - 1`.
    pub fn subgroup(&self, t: usize) -> Result<Vec<usize>, FieldError> {
        if t == 0 || !(self.q - 1).is_multiple_of(t) {
            return Err(FieldError::BadSubgroupOrder { q: self.q, t });
        }
        let h = self.pow(self.generator, (self.q - 1) / t);
        let mut members = vec![1];
        let mut x = h;
        while x != 1 {
            members.push(x);
            x = self.mul(x, h);
        }
        members.sort_unstable();
        debug_assert_eq!(members.len(), t);
        Ok(members)
    }

    /// Dot product of coordinate vectors.
    pub fn dot(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_axioms(q: usize) {
        let f = PrimePowerField::new(q).unwrap();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.mul(a, 0), 0);
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // every nonzero element invertible
        for a in 1..q {
            assert!((1..q).any(|b| f.mul(a, b) == 1), "q={q}: {a} not invertible");
        }
        assert_eq!(f.order(f.generator()), q - 1);
    }

    #[test]
    fn prime_fields() {
        for q in [2, 3, 5, 7, 11, 13] {
            field_axioms(q);
        }
    }

    #[test]
    fn extension_fields() {
        for q in [4, 8, 9, 16, 25, 27, 32, 49, 64] {
            field_axioms(q);
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(PrimePowerField::new(6).is_err());
        assert!(PrimePowerField::new(1).is_err());
        assert!(PrimePowerField::new(12).is_err());
    }

    #[test]
    fn subgroups() {
        let f = PrimePowerField::new(5).unwrap();
        let h = f.subgroup(2).unwrap();
        assert_eq!(h, vec![1, 4]);
        assert!(f.subgroup(3).is_err());

        let f9 = PrimePowerField::new(9).unwrap();
        assert_eq!(f9.subgroup(2).unwrap().len(), 2);
        assert_eq!(f9.subgroup(4).unwrap().len(), 4);
    }
}
