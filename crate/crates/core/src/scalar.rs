//! Coefficient fields: the rationals and prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// A field element. Rational and modular values never mix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64, u64),
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Field of characteristic `c` (0 for the rationals).
    pub fn from_characteristic(c: u64) -> Option<Field> {
        match c {
            0 => Some(Field::Rational),
            p if is_prime(p) && p < (1u64 << 62) => Some(Field::Prime(p)),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp(v.rem_euclid(*p as i64) as u64, *p),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Fp(r.to_u64().unwrap(), *p)
            }
        }
    }

    /// `n/d`; `None` when `d` vanishes in the field.
    pub fn from_fraction(&self, n: &BigInt, d: &BigInt) -> Option<Scalar> {
        if d.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(Scalar::Q(BigRational::new(n.clone(), d.clone()))),
            Field::Prime(_) => {
                let dd = self.from_bigint(d);
                if dd.is_zero() {
                    None
                } else {
                    Some(self.from_bigint(n).div(&dd))
                }
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        self.from_fraction(q.numer(), q.denom())
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp((a + b) % p, *p),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp((a + p - b) % p, *p),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => {
                Scalar::Fp(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a, p) => Scalar::Fp((p - a) % p, *p),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp(a, p) => Scalar::Fp(mod_pow(*a, p - 2, *p), *p),
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = self.field().one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Sign used by the printer: true when the value prints with a leading minus.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp(..) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(v, _) => write!(f, "{}", v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let a = f.from_i64(v);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn fraction_in_prime_field() {
        let f = Field::Prime(5);
        let x = f.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(x, f.from_i64(3));
        assert!(f.from_fraction(&BigInt::from(1), &BigInt::from(10)).is_none());
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(Field::from_characteristic(32003).is_some());
        assert!(Field::from_characteristic(32004).is_none());
    }
}
