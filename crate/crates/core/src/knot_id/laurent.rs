use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// From ascending coefficients starting at exponent `low`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Dense coefficients from the lowest to the highest exponent.
    pub fn coeffs(&self) -> Vec<i64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    /// Substitutes `t -> t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e * k, c);
        }
        out
    }

    /// Substitutes `t -> 1/t`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn eval(&self, t: i64) -> i128 {
        assert!(t != 0 || self.min_exp().map_or(true, |e| e >= 0));
        let mut acc = 0i128;
        for (e, c) in self.terms() {
            acc += c as i128 * (t as i128).pow(e as u32);
        }
        acc
    }

    /// Lowest exponent moved to zero and leading coefficient made positive:
    /// the representative of `p` up to multiplication by `+-t^k`.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exp() else { return LaurentPoly::zero() };
        let p = self.shift(-lo);
        let lead = p.coeff(p.max_exp().unwrap());
        if lead < 0 {
            -p
        } else {
            p
        }
    }

    /// Text form in the variable `var`, highest power first, e.g.
    /// `t^2 - t + 1`.
    pub fn display_in(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (e, c) = (*e, *c);
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            if e == 0 {
                let _ = write!(s, "{mag}");
                continue;
            }
            if mag != 1 {
                let _ = write!(s, "{mag}");
            }
            s.push_str(var);
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}
