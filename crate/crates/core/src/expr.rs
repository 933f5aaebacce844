//! Expression trees over the geometric primitives.
//!
//! Goals are stated as [`Expr`] values so the prover, the floating-point
//! oracle and the report all read the same formula, and so catalog entries
//! can be compared structurally.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::Result;
use crate::functional::i_functional;
use crate::geometry::{self, Constants, GeomScalar};
use crate::interval::{dec, Interval};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Interval),
    /// Named decimal constant, kept by name for display and substitution.
    Decimal(String, Interval),
    Var(usize),
    Pi,
    P5,
    P5Prime,
    BPrime,
    Tau0,
    DodecTotal,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Abs(Box<Expr>),
    CircPerim0(Box<Expr>),
    CircPerim(Box<Expr>, Box<Expr>),
    RegPerim(Box<Expr>, Box<Expr>),
    /// Deficit functional `I(l, n, t, rho)`.
    Deficit(Box<[Expr; 4]>),
    LongEdgePerim(Box<Expr>),
    LongEdgeArea(Box<Expr>),
}

/// Integer or exactly representable constant.
pub fn k(v: f64) -> Expr {
    Expr::Const(Interval::point(v))
}

/// Decimal literal, enclosed exactly.
pub fn d(s: &str) -> Expr {
    Expr::Decimal(s.to_string(), dec(s))
}

pub fn var(i: usize) -> Expr {
    Expr::Var(i)
}

pub fn pi() -> Expr {
    Expr::Pi
}

pub fn tau0() -> Expr {
    Expr::Tau0
}

pub fn circ_perim0(x: Expr) -> Expr {
    Expr::CircPerim0(Box::new(x))
}

pub fn circ_perim(l: Expr, x: Expr) -> Expr {
    Expr::CircPerim(Box::new(l), Box::new(x))
}

pub fn reg_perim(area: Expr, n: Expr) -> Expr {
    Expr::RegPerim(Box::new(area), Box::new(n))
}

pub fn deficit(l: Expr, n: Expr, t: Expr, rho: Expr) -> Expr {
    Expr::Deficit(Box::new([l, n, t, rho]))
}

pub fn long_edge_perim(x: Expr) -> Expr {
    Expr::LongEdgePerim(Box::new(x))
}

pub fn long_edge_area(x: Expr) -> Expr {
    Expr::LongEdgeArea(Box::new(x))
}

pub fn abs(x: Expr) -> Expr {
    Expr::Abs(Box::new(x))
}

/// `rho·π/3`, the area of a cell with area fraction `rho`.
pub fn area_of(rho: Expr) -> Expr {
    rho * pi() / k(3.0)
}

fn dodec_total() -> Result<Interval> {
    static TOTAL: OnceLock<Result<Interval>> = OnceLock::new();
    TOTAL.get_or_init(geometry::dodecahedral_total).clone()
}

impl Expr {
    /// Evaluate with `x` supplying the variables.
    pub fn eval<S: GeomScalar>(&self, x: &[S]) -> Result<S> {
        let c = Constants::get();
        Ok(match self {
            Expr::Const(v) => S::constant(*v),
            Expr::Decimal(_, v) => S::constant(*v),
            Expr::Var(i) => x[*i],
            Expr::Pi => S::pi(),
            Expr::P5 => S::constant(c.p5),
            Expr::P5Prime => S::constant(c.p5_prime),
            Expr::BPrime => S::constant(c.b_prime),
            Expr::Tau0 => S::constant(c.tau0),
            Expr::DodecTotal => S::constant(dodec_total()?),
            Expr::Add(a, b) => a.eval(x)? + b.eval(x)?,
            Expr::Sub(a, b) => a.eval(x)? - b.eval(x)?,
            Expr::Mul(a, b) => a.eval(x)? * b.eval(x)?,
            Expr::Div(a, b) => a.eval(x)?.try_div(&b.eval(x)?)?,
            Expr::Neg(a) => -a.eval(x)?,
            Expr::Abs(a) => a.eval(x)?.abs()?,
            Expr::CircPerim0(a) => geometry::circ_perim0(a.eval(x)?)?,
            Expr::CircPerim(l, a) => S::circ_perim(l.eval(x)?, a.eval(x)?)?,
            Expr::RegPerim(a, n) => geometry::reg_perim(a.eval(x)?, n.eval(x)?)?,
            Expr::Deficit(args) => {
                let [l, n, t, rho] = &**args;
                i_functional(l.eval(x)?, n.eval(x)?, t.eval(x)?, rho.eval(x)?)
            }
            Expr::LongEdgePerim(a) => geometry::perim_area(a.eval(x)?)?.perim,
            Expr::LongEdgeArea(a) => geometry::perim_area(a.eval(x)?)?.area,
        })
    }

    /// Interval value of a closed expression (no variables).
    pub fn value(&self) -> Result<Interval> {
        self.eval::<Interval>(&[])
    }

    /// Number of variables referenced (one more than the largest index).
    pub fn arity(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |e| {
            if let Expr::Var(i) = e {
                n = n.max(i + 1);
            }
        });
        n
    }

    /// Every named decimal literal, in order of appearance.
    pub fn decimals(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let Expr::Decimal(s, _) = e {
                out.push(s.clone());
            }
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::CircPerim(a, b)
            | Expr::RegPerim(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            Expr::Neg(a)
            | Expr::Abs(a)
            | Expr::CircPerim0(a)
            | Expr::LongEdgePerim(a)
            | Expr::LongEdgeArea(a) => a.visit(f),
            Expr::Deficit(args) => args.iter().for_each(|a| a.visit(f)),
            _ => {}
        }
    }
}

const VAR_NAMES: [&str; 4] = ["x0", "x1", "x2", "x3"];

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) if v.is_point() => write!(f, "{}", v.lo()),
            Expr::Const(v) => write!(f, "{v}"),
            Expr::Decimal(s, _) => write!(f, "{s}"),
            Expr::Var(i) => write!(f, "{}", VAR_NAMES.get(*i).copied().unwrap_or("x?")),
            Expr::Pi => write!(f, "π"),
            Expr::P5 => write!(f, "p5"),
            Expr::P5Prime => write!(f, "p5'"),
            Expr::BPrime => write!(f, "B'"),
            Expr::Tau0 => write!(f, "τ0"),
            Expr::DodecTotal => write!(f, "dodecahedral_total()"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}·{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Abs(a) => write!(f, "|{a}|"),
            Expr::CircPerim0(a) => write!(f, "circ_perim0({a})"),
            Expr::CircPerim(l, a) => write!(f, "circ_perim({l}, {a})"),
            Expr::RegPerim(a, n) => write!(f, "reg_perim({a}, {n})"),
            Expr::Deficit(args) => {
                let [l, n, t, rho] = &**args;
                write!(f, "I({l}, {n}, {t}, {rho})")
            }
            Expr::LongEdgePerim(a) => write!(f, "perim({a})"),
            Expr::LongEdgeArea(a) => write!(f, "area({a})"),
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, r: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(r))
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, r: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(r))
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, r: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(r))
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, r: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(r))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Jet2;

    #[test]
    fn evaluates_in_every_mode() {
        let e = circ_perim0(area_of(var(0)));
        let p = e.eval(&[1.0f64]).unwrap();
        let i = e.eval(&[Interval::ONE]).unwrap();
        let j = e.eval(&[Jet2::variable(Interval::ONE)]).unwrap();
        assert!(i.contains(p) && j.val == i);
        assert_eq!(e.arity(), 1);
    }

    #[test]
    fn decimals_are_exact_enclosures() {
        let e = d("0.1") + d("0.2");
        assert!(e.value().unwrap().contains(0.30000000000000004));
        assert_eq!(e.decimals(), vec!["0.1".to_string(), "0.2".to_string()]);
        assert_eq!(e.to_string(), "(0.1 + 0.2)");
    }
}
