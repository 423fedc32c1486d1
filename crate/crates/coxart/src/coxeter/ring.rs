//! The ring Z[phi], phi^2 = phi + 1, used for exact root coordinates.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*phi` with `phi = (1 + sqrt 5)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPhi {
    pub a: i64,
    pub b: i64,
}

fn ck(x: Option<i64>) -> i64 {
    x.expect("root coordinate overflow (word too long for an infinite group)")
}

impl ZPhi {
    pub const ZERO: ZPhi = ZPhi { a: 0, b: 0 };
    pub const ONE: ZPhi = ZPhi { a: 1, b: 0 };
    pub const PHI: ZPhi = ZPhi { a: 0, b: 1 };

    pub fn int(a: i64) -> ZPhi {
        ZPhi { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign: `a + b*phi = ((2a+b) + b*sqrt 5)/2`.
    pub fn signum(self) -> Ordering {
        let x = ck(self.a.checked_mul(2).and_then(|v| v.checked_add(self.b))) as i128;
        let y = self.b as i128;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Less | Ordering::Equal, Ordering::Less | Ordering::Equal) => Ordering::Less,
            (Ordering::Greater | Ordering::Equal, Ordering::Greater | Ordering::Equal) => {
                Ordering::Greater
            }
            // opposite signs: compare x^2 with 5 y^2
            (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(5 * y * y)),
            (Ordering::Less, Ordering::Greater) => (5 * y * y).cmp(&(x * x)),
        }
    }
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, o: ZPhi) -> ZPhi {
        ZPhi {
            a: ck(self.a.checked_add(o.a)),
            b: ck(self.b.checked_add(o.b)),
        }
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, o: ZPhi) -> ZPhi {
        ZPhi {
            a: ck(self.a.checked_sub(o.a)),
            b: ck(self.b.checked_sub(o.b)),
        }
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi { a: -self.a, b: -self.b }
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, o: ZPhi) -> ZPhi {
        let ac = ck(self.a.checked_mul(o.a));
        let bd = ck(self.b.checked_mul(o.b));
        let ad = ck(self.a.checked_mul(o.b));
        let bc = ck(self.b.checked_mul(o.a));
        ZPhi {
            a: ck(ac.checked_add(bd)),
            b: ck(ck(ad.checked_add(bc)).checked_add(bd)),
        }
    }
}
