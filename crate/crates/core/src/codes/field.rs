//! Arithmetic in GF(2^l) for l in 1..=16.
//!
//! Elements are bit vectors of polynomial coefficients; addition is xor and
//! multiplication reduces modulo a fixed irreducible polynomial per degree.

use crate::error::{Error, Result};

pub const MAX_DEGREE: u8 = 16;

/// Reduction polynomials, indexed by degree, including the leading term.
const MODULI: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// The reduction polynomial for `degree`.
pub fn irreducible_modulus(degree: u8) -> Result<u32> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(degree));
    }
    Ok(MODULI[degree as usize])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    degree: u8,
}

impl FieldElement {
    pub fn new(value: u32, degree: u8) -> Result<Self> {
        irreducible_modulus(degree)?;
        if value >> degree != 0 {
            return Err(Error::NotAFieldElement { value, degree });
        }
        Ok(FieldElement { value, degree })
    }

    pub fn zero(degree: u8) -> Result<Self> {
        Self::new(0, degree)
    }

    pub fn one(degree: u8) -> Result<Self> {
        Self::new(1, degree)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn degree(self) -> u8 {
        self.degree
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    // Caller guarantees equal degrees.
    pub(crate) fn add_raw(self, other: Self) -> Self {
        FieldElement {
            value: self.value ^ other.value,
            degree: self.degree,
        }
    }

    pub(crate) fn mul_raw(self, other: Self) -> Self {
        let modulus = MODULI[self.degree as usize];
        let top = 1u32 << self.degree;
        let mut a = self.value;
        let mut b = other.value;
        let mut acc = 0u32;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= modulus;
            }
        }
        FieldElement {
            value: acc,
            degree: self.degree,
        }
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = FieldElement {
            value: 1,
            degree: self.degree,
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_raw(base);
            }
            base = base.mul_raw(base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // a^(2^l - 2) = a^-1 in a field of order 2^l
        Some(self.pow((1u64 << self.degree) - 2))
    }
}

fn same_degree(a: FieldElement, b: FieldElement) -> Result<()> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch(a.degree, b.degree));
    }
    Ok(())
}

pub fn field_add(a: FieldElement, b: FieldElement) -> Result<FieldElement> {
    same_degree(a, b)?;
    Ok(a.add_raw(b))
}

pub fn field_mul(a: FieldElement, b: FieldElement) -> Result<FieldElement> {
    same_degree(a, b)?;
    Ok(a.mul_raw(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u32, d: u8) -> FieldElement {
        FieldElement::new(v, d).unwrap()
    }

    /// Remainder of carry-less division, for the irreducibility oracle.
    fn poly_rem(mut a: u64, b: u64) -> u64 {
        let db = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= db {
            a ^= b << (63 - a.leading_zeros() - db);
        }
        a
    }

    #[test]
    fn moduli_are_irreducible() {
        for d in 1..=MAX_DEGREE {
            let m = u64::from(irreducible_modulus(d).unwrap());
            assert_eq!(63 - m.leading_zeros(), u32::from(d));
            // any factorization has a factor of degree <= d/2
            for f in 2u64..(1u64 << (d / 2 + 1)) {
                if 63 - f.leading_zeros() <= u32::from(d) / 2 {
                    assert_ne!(poly_rem(m, f), 0, "degree {d} modulus divisible by {f:#b}");
                }
            }
        }
        assert_eq!(irreducible_modulus(8).unwrap(), 0x11B);
        assert!(irreducible_modulus(0).is_err());
        assert!(irreducible_modulus(17).is_err());
    }

    #[test]
    fn small_examples() {
        let x = fe(0b101, 3);
        assert!(field_add(x, x).unwrap().is_zero());
        assert_eq!(field_mul(x, fe(1, 3)).unwrap(), x);
        // x * x^2 = x^3 = x + 1 mod x^3 + x + 1
        assert_eq!(field_mul(fe(0b010, 3), fe(0b100, 3)).unwrap(), fe(0b011, 3));
        assert!(matches!(
            field_mul(fe(1, 3), fe(1, 4)),
            Err(Error::DegreeMismatch(3, 4))
        ));
        assert!(FieldElement::new(8, 3).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_up_to_degree_4() {
        for d in 1..=4u8 {
            let elems: Vec<_> = (0..1u32 << d).map(|v| fe(v, d)).collect();
            let zero = fe(0, d);
            let one = fe(1, d);
            for &a in &elems {
                assert_eq!(field_add(a, zero).unwrap(), a);
                assert_eq!(field_mul(a, one).unwrap(), a);
                if !a.is_zero() {
                    assert_eq!(field_mul(a, a.inverse().unwrap()).unwrap(), one);
                }
                for &b in &elems {
                    assert_eq!(field_mul(a, b).unwrap(), field_mul(b, a).unwrap());
                    assert_eq!(field_add(a, b).unwrap(), field_add(b, a).unwrap());
                    for &c in &elems {
                        let ab_c = field_mul(field_mul(a, b).unwrap(), c).unwrap();
                        let a_bc = field_mul(a, field_mul(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let lhs = field_mul(a, field_add(b, c).unwrap()).unwrap();
                        let rhs =
                            field_add(field_mul(a, b).unwrap(), field_mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_exist_in_large_fields() {
        for d in [8u8, 12, 16] {
            for v in [1u32, 2, 3, 0x55, (1 << d) - 1] {
                let a = fe(v, d);
                assert_eq!(a.mul_raw(a.inverse().unwrap()).value(), 1);
            }
        }
    }
}
