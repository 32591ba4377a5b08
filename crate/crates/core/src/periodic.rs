//! One-periodic functions that are absolutely continuous on `(0,1)`.
//!
//! Every descriptor is either a polynomial in the fractional part `{x}`
//! (evaluated exactly) or one of the trigonometric families
//! `sin(2 pi x)`, `cos(2 pi x)`, `e(x) = exp(2 pi i x)` (evaluated in
//! double precision).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{binomial, factorial, frac, parse_rational, pow, to_f64};
use crate::exact::{bernoulli_poly, BoundaryMode, Rational, RationalPoly, SymbolicValue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PeriodicFn {
    /// `b_q(x) = B_q({x})`.
    Bernoulli(u32),
    /// `{x}^q`, `q >= 1`.
    PowerFrac(u32),
    /// `{x} - a`, `0 < a < 1`.
    ShiftedFrac(Rational),
    /// `F({x})` for `F(t) = sum c_d t^d`.
    PolyFrac(Vec<Rational>),
    Sin,
    Cos,
    ExpE,
}

/// A scalar that is exact when every ingredient is, and a complex float
/// otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(Complex64),
}

impl Scalar {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(r) => Complex64::new(to_f64(r), 0.0),
            Scalar::Float(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a - b),
            _ => Scalar::Float(self.to_complex() - other.to_complex()),
        }
    }

    /// Magnitude as a float, for tolerance checks.
    pub fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(z) if z.im == 0.0 => write!(f, "{:.16e}", z.re),
            Scalar::Float(z) => write!(f, "{:.16e}{:+.16e}i", z.re, z.im),
        }
    }
}

/// Jump data `f(1^-)`, `f(0^+)` and their difference. All supported
/// families have rational one-sided limits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpData {
    #[serde(with = "crate::exact::rational::serde_rational")]
    pub delta: Rational,
    #[serde(with = "crate::exact::rational::serde_rational")]
    pub left_value: Rational,
    #[serde(with = "crate::exact::rational::serde_rational")]
    pub right_value: Rational,
}

/// How [`jump_ratio_single`] treats a function without a jump at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ContinuousLimit {
    /// Reject continuous functions.
    #[default]
    Reject,
    /// The power-sum value `(r+1) f(0)^r`.
    PowerSum,
    /// The limit along the family `{x} - a`: `-(r+1) f(0)^(r+1)`.
    ShiftedFamily,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCoeff {
    pub n: i64,
    pub value: SymbolicValue,
}

impl PeriodicFn {
    pub fn validate(&self) -> Result<()> {
        match self {
            PeriodicFn::PowerFrac(0) => Err(Error::InvalidDescriptor(
                "pow:0 (power must be >= 1)".into(),
            )),
            PeriodicFn::ShiftedFrac(a) if *a <= Rational::zero() || *a >= Rational::one() => Err(
                Error::InvalidDescriptor(format!("shift:{a} (shift must lie in (0,1))")),
            ),
            PeriodicFn::PolyFrac(c) if c.is_empty() => {
                Err(Error::InvalidDescriptor("poly: (no coefficients)".into()))
            }
            _ => Ok(()),
        }
    }

    /// The polynomial `F` with `f(x) = F({x})`, or `None` for the
    /// trigonometric families.
    pub fn poly(&self) -> Option<RationalPoly> {
        match self {
            PeriodicFn::Bernoulli(q) => Some(bernoulli_poly(*q).as_poly().clone()),
            PeriodicFn::PowerFrac(q) => Some(RationalPoly::monomial(*q as usize)),
            PeriodicFn::ShiftedFrac(a) => Some(RationalPoly::new(vec![-a, Rational::one()])),
            PeriodicFn::PolyFrac(c) => Some(RationalPoly::new(c.clone())),
            PeriodicFn::Sin | PeriodicFn::Cos | PeriodicFn::ExpE => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        !self.is_trig()
    }

    pub fn is_trig(&self) -> bool {
        matches!(self, PeriodicFn::Sin | PeriodicFn::Cos | PeriodicFn::ExpE)
    }

    pub fn jump(&self) -> JumpData {
        let (left, right) = match self.poly() {
            Some(p) => (p.eval(&Rational::one()), p.eval(&Rational::zero())),
            None => {
                let v = if matches!(self, PeriodicFn::Sin) {
                    Rational::zero()
                } else {
                    Rational::one()
                };
                (v.clone(), v)
            }
        };
        JumpData {
            delta: &left - &right,
            left_value: left,
            right_value: right,
        }
    }

    pub fn eval(&self, x: &Rational, mode: BoundaryMode) -> Scalar {
        let t = frac(x);
        match self.poly() {
            Some(p) => Scalar::Exact(eval_poly_periodic(&p, &t, mode)),
            None => Scalar::Float(self.eval_trig(to_f64(&t))),
        }
    }

    /// Trigonometric value at a point already reduced into `[0,1)`.
    pub(crate) fn eval_trig(&self, t: f64) -> Complex64 {
        let theta = std::f64::consts::TAU * t;
        match self {
            PeriodicFn::Sin => Complex64::new(theta.sin(), 0.0),
            PeriodicFn::Cos => Complex64::new(theta.cos(), 0.0),
            PeriodicFn::ExpE => Complex64::new(theta.cos(), theta.sin()),
            _ => unreachable!("eval_trig on a polynomial family"),
        }
    }

    pub fn fourier_coeff(&self, n: i64) -> Result<SymbolicValue> {
        match self {
            PeriodicFn::Bernoulli(q) => Ok(bernoulli_fourier(*q, n)),
            PeriodicFn::ShiftedFrac(a) if n == 0 => Ok(SymbolicValue::rational(
                Rational::new(1.into(), 2.into()) - a,
            )),
            PeriodicFn::ShiftedFrac(_) => Ok(bernoulli_fourier(1, n)),
            PeriodicFn::Sin => Ok(match n {
                1 => SymbolicValue::new(Rational::new((-1).into(), 2.into()), 0, 1),
                -1 => SymbolicValue::new(Rational::new(1.into(), 2.into()), 0, 1),
                _ => SymbolicValue::zero(),
            }),
            PeriodicFn::Cos => Ok(if n.abs() == 1 {
                SymbolicValue::rational(Rational::new(1.into(), 2.into()))
            } else {
                SymbolicValue::zero()
            }),
            PeriodicFn::ExpE => Ok(if n == 1 {
                SymbolicValue::one()
            } else {
                SymbolicValue::zero()
            }),
            PeriodicFn::PowerFrac(_) | PeriodicFn::PolyFrac(_) => {
                let mut terms = self.fourier_terms(n)?;
                match terms.len() {
                    0 => Ok(SymbolicValue::zero()),
                    1 => Ok(terms.pop().unwrap()),
                    _ => Err(Error::Unsupported(format!(
                        "Fourier coefficient of {self} at n = {n} mixes powers of pi; use fourier_terms"
                    ))),
                }
            }
        }
    }

    /// The Fourier coefficient as a sum of symbolic terms, one per
    /// Bernoulli component. Zero terms are dropped.
    pub fn fourier_terms(&self, n: i64) -> Result<Vec<SymbolicValue>> {
        let Some(p) = self.poly() else {
            let c = self.fourier_coeff(n)?;
            return Ok(if c.is_zero() { vec![] } else { vec![c] });
        };
        Ok(bernoulli_expansion(&p)
            .into_iter()
            .enumerate()
            .map(|(s, c)| bernoulli_fourier(s as u32, n).scale(&c))
            .filter(|v| !v.is_zero())
            .collect())
    }
}

pub(crate) fn eval_poly_periodic(p: &RationalPoly, t: &Rational, mode: BoundaryMode) -> Rational {
    if !t.is_zero() {
        return p.eval(t);
    }
    let right = p.eval(&Rational::zero());
    let left = p.eval(&Rational::one());
    match mode {
        BoundaryMode::Right => right,
        BoundaryMode::Left => left,
        BoundaryMode::Principal => (left + right) / Rational::from_integer(2.into()),
    }
}

/// `c_n(b_q)`: `-q!/(2 pi i n)^q` for `n != 0`.
fn bernoulli_fourier(q: u32, n: i64) -> SymbolicValue {
    if q == 0 {
        return if n == 0 {
            SymbolicValue::one()
        } else {
            SymbolicValue::zero()
        };
    }
    if n == 0 {
        return SymbolicValue::zero();
    }
    let denom = pow(&Rational::from_integer((2 * n).into()), q);
    let c = -Rational::from_integer(factorial(q)) / denom;
    SymbolicValue::new(c, -(q as i32), -(q as i64))
}

/// Coefficients of `p` in the Bernoulli basis `B_0, B_1, ...`.
pub fn bernoulli_expansion(p: &RationalPoly) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.degree() + 1];
    for (d, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (s, w) in power_to_bernoulli(d as u32) {
            out[s as usize] += c * w;
        }
    }
    out
}

/// `x^q = sum_s C(q+1, s)/(q+1) B_s(x)`, returned as `(s, coefficient)`.
pub fn power_to_bernoulli(q: u32) -> Vec<(u32, Rational)> {
    let q1 = Rational::from_integer((q + 1).into());
    (0..=q)
        .map(|s| (s, Rational::from_integer(binomial(q + 1, s)) / &q1))
        .collect()
}

/// `prod_j f_j(1^-) - prod_j f_j(0^+)`.
pub fn jump_product(fvec: &[PeriodicFn]) -> Rational {
    let (l, r) = fvec
        .iter()
        .map(PeriodicFn::jump)
        .fold((Rational::one(), Rational::one()), |(l, r), j| {
            (l * j.left_value, r * j.right_value)
        });
    l - r
}

/// `sum_{k=0}^r f(1^-)^k f(0^+)^(r-k)`, the ratio of the jump of `f^(r+1)`
/// to the jump of `f`. For `f` without a jump the caller picks a limit.
pub fn jump_ratio_single(f: &PeriodicFn, r: u32, limit: ContinuousLimit) -> Result<Rational> {
    let j = f.jump();
    if j.delta.is_zero() {
        let f0 = j.right_value;
        let r1 = Rational::from_integer((r + 1).into());
        return match limit {
            ContinuousLimit::PowerSum => Ok(r1 * pow(&f0, r)),
            ContinuousLimit::ShiftedFamily => Ok(-r1 * pow(&f0, r + 1)),
            ContinuousLimit::Reject => Err(Error::InvalidParameter(format!(
                "{f} has no jump at 0; choose a continuous-limit convention"
            ))),
        };
    }
    Ok((0..=r).fold(Rational::zero(), |acc, k| {
        acc + pow(&j.left_value, k) * pow(&j.right_value, r - k)
    }))
}

impl fmt::Display for PeriodicFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodicFn::Bernoulli(q) => write!(f, "b:{q}"),
            PeriodicFn::PowerFrac(q) => write!(f, "pow:{q}"),
            PeriodicFn::ShiftedFrac(a) => write!(f, "shift:{a}"),
            PeriodicFn::PolyFrac(c) => {
                write!(f, "poly:")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            PeriodicFn::Sin => write!(f, "sin"),
            PeriodicFn::Cos => write!(f, "cos"),
            PeriodicFn::ExpE => write!(f, "e"),
        }
    }
}

impl FromStr for PeriodicFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDescriptor(s.to_string());
        let t = s.trim();
        let f = match t.split_once(':') {
            None => match t {
                "sin" => PeriodicFn::Sin,
                "cos" => PeriodicFn::Cos,
                "e" => PeriodicFn::ExpE,
                _ => return Err(bad()),
            },
            Some(("b", q)) => PeriodicFn::Bernoulli(q.trim().parse().map_err(|_| bad())?),
            Some(("pow", q)) => PeriodicFn::PowerFrac(q.trim().parse().map_err(|_| bad())?),
            Some(("shift", a)) => PeriodicFn::ShiftedFrac(parse_rational(a).map_err(|_| bad())?),
            Some(("poly", cs)) => PeriodicFn::PolyFrac(
                cs.split(',')
                    .map(parse_rational)
                    .collect::<Result<_>>()
                    .map_err(|_| bad())?,
            ),
            Some(_) => return Err(bad()),
        };
        f.validate()?;
        Ok(f)
    }
}

/// Parses a comma-separated descriptor list such as `b:1,poly:0,1/2,1,cos`.
/// Bare numeric tokens continue the coefficient list of the preceding
/// `poly:` descriptor.
pub fn parse_list(s: &str) -> Result<Vec<PeriodicFn>> {
    let mut groups: Vec<String> = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let continues_poly = groups.last().is_some_and(|g| g.starts_with("poly:"))
            && !tok.contains(':')
            && !matches!(tok, "sin" | "cos" | "e");
        match groups.last_mut() {
            Some(g) if continues_poly => {
                g.push(',');
                g.push_str(tok);
            }
            _ => groups.push(tok.to_string()),
        }
    }
    groups.iter().map(|g| g.parse()).collect()
}

/// Inverse of [`parse_list`].
pub fn format_list(fvec: &[PeriodicFn]) -> String {
    fvec.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use crate::exact::{bernoulli_poly, eval_periodic_bernoulli};
    use proptest::prelude::*;

    fn exact(s: Scalar) -> Rational {
        s.as_exact().cloned().expect("exact scalar")
    }

    #[test]
    fn evaluation() {
        let p = BoundaryMode::Principal;
        assert_eq!(
            exact(PeriodicFn::PowerFrac(2).eval(&ratio(5, 3), p)),
            ratio(4, 9)
        );
        assert_eq!(
            exact(PeriodicFn::ShiftedFrac(ratio(1, 4)).eval(&ratio(1, 2), p)),
            ratio(1, 4)
        );
        assert_eq!(
            exact(PeriodicFn::Bernoulli(1).eval(&ratio(7, 2), p)),
            int(0)
        );
        let z = PeriodicFn::ExpE.eval(&ratio(1, 4), p).to_complex();
        assert!((z - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn jumps() {
        assert_eq!(PeriodicFn::PowerFrac(3).jump().delta, int(1));
        assert_eq!(PeriodicFn::PowerFrac(3).jump().right_value, int(0));
        assert_eq!(PeriodicFn::Cos.jump().delta, int(0));
        assert_eq!(
            PeriodicFn::PolyFrac(vec![int(0), int(0), int(1)])
                .jump()
                .delta,
            int(1)
        );
        assert_eq!(PeriodicFn::ShiftedFrac(ratio(1, 3)).jump().delta, int(1));
        assert_eq!(PeriodicFn::Bernoulli(1).jump().delta, int(1));
        for q in [0, 2, 3, 4] {
            assert_eq!(PeriodicFn::Bernoulli(q).jump().delta, int(0));
        }
        for f in [PeriodicFn::Sin, PeriodicFn::Cos, PeriodicFn::ExpE] {
            let j = f.jump();
            assert_eq!(j.delta, &j.left_value - &j.right_value);
        }
    }

    #[test]
    fn jump_products() {
        let b1 = PeriodicFn::Bernoulli(1);
        assert_eq!(jump_product(&[b1.clone(), b1.clone(), b1]), ratio(1, 4));
        let p1 = PeriodicFn::PowerFrac(1);
        assert_eq!(jump_product(&[p1.clone(), p1]), int(1));
        let a = [ratio(1, 5), ratio(2, 7), ratio(1, 2)];
        let fv: Vec<_> = a.iter().cloned().map(PeriodicFn::ShiftedFrac).collect();
        let expect = a.iter().fold(int(1), |acc, x| acc * (int(1) - x))
            + a.iter().fold(int(1), |acc, x| acc * x);
        assert_eq!(jump_product(&fv), expect);
    }

    #[test]
    fn jump_ratios() {
        let r = |f: &PeriodicFn, n| jump_ratio_single(f, n, ContinuousLimit::Reject).unwrap();
        assert_eq!(r(&PeriodicFn::Bernoulli(1), 2), ratio(1, 4));
        assert_eq!(r(&PeriodicFn::PowerFrac(1), 1), int(1));
        assert_eq!(r(&PeriodicFn::PowerFrac(2), 0), int(1));
        assert!(jump_ratio_single(&PeriodicFn::Cos, 2, ContinuousLimit::Reject).is_err());
        assert_eq!(
            jump_ratio_single(&PeriodicFn::Cos, 2, ContinuousLimit::PowerSum).unwrap(),
            int(3)
        );
        assert_eq!(
            jump_ratio_single(&PeriodicFn::Cos, 2, ContinuousLimit::ShiftedFamily).unwrap(),
            int(-3)
        );
    }

    #[test]
    fn jump_ratio_matches_power_jump() {
        // The jump of f^(r+1) is delta(f) times the ratio.
        for f in [
            PeriodicFn::Bernoulli(1),
            PeriodicFn::ShiftedFrac(ratio(2, 9)),
            PeriodicFn::PowerFrac(3),
        ] {
            let j = f.jump();
            for r in 0..5u32 {
                let lhs = pow(&j.left_value, r + 1) - pow(&j.right_value, r + 1);
                let rhs = &j.delta * jump_ratio_single(&f, r, ContinuousLimit::Reject).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn fourier_coefficients() {
        let c = PeriodicFn::Bernoulli(1).fourier_coeff(1).unwrap();
        // -1/(2 pi i) = (i/2) pi^-1
        assert_eq!(c, SymbolicValue::new(ratio(1, 2), -1, 1));
        assert_eq!(
            PeriodicFn::ExpE.fourier_coeff(1).unwrap(),
            SymbolicValue::one()
        );
        assert_eq!(
            PeriodicFn::ExpE.fourier_coeff(-1).unwrap(),
            SymbolicValue::zero()
        );
        assert_eq!(
            PeriodicFn::Bernoulli(2).fourier_coeff(0).unwrap(),
            SymbolicValue::zero()
        );
        assert_eq!(
            PeriodicFn::Bernoulli(0).fourier_coeff(0).unwrap(),
            SymbolicValue::one()
        );
        let s1 = PeriodicFn::Sin.fourier_coeff(1).unwrap().to_complex();
        assert!((s1 - Complex64::new(0.0, -0.5)).norm() < 1e-16);
        assert_eq!(
            PeriodicFn::Cos.fourier_coeff(-1).unwrap(),
            SymbolicValue::rational(ratio(1, 2))
        );
        let b2 = PeriodicFn::Bernoulli(2).fourier_coeff(3).unwrap();
        let expect = 2.0 / (2.0 * std::f64::consts::PI * 3.0).powi(2);
        assert!((b2.to_f64() - expect).abs() < 1e-17);
    }

    #[test]
    fn shifted_fourier_matches_decomposition() {
        let a = ratio(1, 3);
        let f = PeriodicFn::ShiftedFrac(a.clone());
        assert_eq!(
            f.fourier_coeff(0).unwrap(),
            SymbolicValue::rational(ratio(1, 2) - &a)
        );
        for n in [-3, -1, 1, 2] {
            assert_eq!(
                f.fourier_coeff(n).unwrap(),
                PeriodicFn::Bernoulli(1).fourier_coeff(n).unwrap()
            );
        }
        let pf = PeriodicFn::PolyFrac(vec![-a, int(1)]);
        assert_eq!(pf.fourier_coeff(2).unwrap(), f.fourier_coeff(2).unwrap());
    }

    #[test]
    fn power_fourier_needs_terms() {
        assert!(PeriodicFn::PowerFrac(2).fourier_coeff(1).is_err());
        let terms = PeriodicFn::PowerFrac(2).fourier_terms(1).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(
            PeriodicFn::PowerFrac(2).fourier_terms(0).unwrap(),
            vec![SymbolicValue::rational(ratio(1, 3))]
        );
    }

    #[test]
    fn fourier_series_converges() {
        let x = 1.0 / 3.0;
        for q in 1..=3u32 {
            let target = to_f64(&eval_periodic_bernoulli(
                q,
                &ratio(1, 3),
                BoundaryMode::Principal,
            ));
            let f = PeriodicFn::Bernoulli(q);
            for n_max in [100i64, 1000] {
                let mut s = crate::sum::NeumaierSum::new();
                for n in -n_max..=n_max {
                    let c = f.fourier_coeff(n).unwrap().to_complex();
                    let e = Complex64::from_polar(1.0, std::f64::consts::TAU * n as f64 * x);
                    s.add((c * e).re);
                }
                let err = (s.value() - target).abs();
                assert!(
                    err <= 10.0 / (n_max as f64).powi(q as i32),
                    "q={q} N={n_max} err={err}"
                );
            }
        }
    }

    #[test]
    fn power_to_bernoulli_cases() {
        assert_eq!(power_to_bernoulli(1), vec![(0, ratio(1, 2)), (1, int(1))]);
        assert_eq!(power_to_bernoulli(0), vec![(0, int(1))]);
        assert_eq!(
            power_to_bernoulli(2),
            vec![(0, ratio(1, 3)), (1, int(1)), (2, int(1))]
        );
    }

    #[test]
    fn descriptor_grammar() {
        let fs = parse_list("b:1,pow:2,shift:1/4,poly:0,1/2,1,sin,cos,e").unwrap();
        assert_eq!(fs.len(), 7);
        assert_eq!(
            fs[3],
            PeriodicFn::PolyFrac(vec![int(0), ratio(1, 2), int(1)])
        );
        assert_eq!(
            format_list(&fs),
            "b:1,pow:2,shift:1/4,poly:0,1/2,1,sin,cos,e"
        );
        assert!("pow:0".parse::<PeriodicFn>().is_err());
        assert!("shift:1".parse::<PeriodicFn>().is_err());
        assert!("tan".parse::<PeriodicFn>().is_err());
        assert!("b:x".parse::<PeriodicFn>().is_err());
        assert!(parse_list("b:1,3").is_err());
    }

    fn arb_fn() -> impl Strategy<Value = PeriodicFn> {
        prop_oneof![
            (0u32..8).prop_map(PeriodicFn::Bernoulli),
            (1u32..8).prop_map(PeriodicFn::PowerFrac),
            (2i64..50)
                .prop_flat_map(|d| (1..d).prop_map(move |n| PeriodicFn::ShiftedFrac(ratio(n, d)))),
            prop::collection::vec((-20i64..20, 1i64..9), 1..5).prop_map(|cs| PeriodicFn::PolyFrac(
                cs.into_iter().map(|(n, d)| ratio(n, d)).collect()
            )),
            Just(PeriodicFn::Sin),
            Just(PeriodicFn::Cos),
            Just(PeriodicFn::ExpE),
        ]
    }

    proptest! {
        #[test]
        fn descriptor_round_trip(fs in prop::collection::vec(arb_fn(), 1..5)) {
            let s = format_list(&fs);
            prop_assert_eq!(parse_list(&s).unwrap(), fs.clone());
            prop_assert_eq!(format_list(&parse_list(&s).unwrap()), s);
        }

        #[test]
        fn periodicity(f in arb_fn(), n in -500i64..500, d in 2i64..60) {
            prop_assume!(f.is_polynomial() && n % d != 0);
            let x = ratio(n, d);
            let p = BoundaryMode::Principal;
            prop_assert_eq!(f.eval(&(&x + int(1)), p), f.eval(&x, p));
        }

        #[test]
        fn jump_matches_polynomial_endpoints(f in arb_fn()) {
            if let Some(p) = f.poly() {
                prop_assert_eq!(f.jump().delta, p.eval(&int(1)) - p.eval(&int(0)));
            }
        }

        #[test]
        fn shifted_is_b1_plus_constant(n in 1i64..40, x in -300i64..300, d in 2i64..41) {
            let a = ratio(n, 41);
            let p = BoundaryMode::Principal;
            let lhs = exact(PeriodicFn::ShiftedFrac(a.clone()).eval(&ratio(x, d), p));
            let rhs = exact(PeriodicFn::Bernoulli(1).eval(&ratio(x, d), p)) + ratio(1, 2) - &a;
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(PeriodicFn::ShiftedFrac(a).jump().delta, PeriodicFn::Bernoulli(1).jump().delta);
        }

        #[test]
        fn power_to_bernoulli_round_trip(q in 0u32..20) {
            let sum = power_to_bernoulli(q).into_iter().fold(RationalPoly::zero(), |acc, (s, c)| {
                &acc + &bernoulli_poly(s).as_poly().scale(&c)
            });
            prop_assert_eq!(sum, RationalPoly::monomial(q as usize));
        }
    }
}
