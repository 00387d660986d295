//! Element expressions: curve elements combine in Γ, everything else in the
//! chosen superalgebra. `bar(b)`, `X(b)`, `w1(a)`, `x1(b)` build odd and
//! CK elements from curve-element arguments.

use superjordan::bracket::{kantor_double, CurveCarrier, DBracket, KantorDouble};
use superjordan::constructions::{ChengKac, CkElem, JADelta, VecElem, VectorType};
use superjordan::curve::Space;
use superjordan::expr::{self, Expr};
use superjordan::superalg::SuperAlgebra;
use superjordan::{Error, GammaEl, Rational, Result};

use crate::Construction;

/// How expressions are interpreted in one construction.
pub trait Evaluator {
    type Alg: SuperAlgebra<Scalar = Rational>;

    fn algebra(&self) -> &Self::Alg;
    /// The curve element `g` as an even element.
    fn lift(&self, g: GammaEl) -> Result<<Self::Alg as SuperAlgebra>::Elem>;
    fn call(&self, name: &str, arg: GammaEl, pos: usize) -> Result<<Self::Alg as SuperAlgebra>::Elem>;
    /// Expressions for the rows and columns of the multiplication table.
    fn generators(&self) -> &'static [&'static str];
}

fn require(g: &GammaEl, space: Space, what: &str) -> Result<()> {
    if g.in_space(space) {
        Ok(())
    } else {
        Err(Error::NotInJAlgebra(format!("{what} needs an argument in {}, got {g}", space.name())))
    }
}

fn unknown(name: &str, pos: usize) -> Error {
    Error::Parse {
        pos,
        msg: format!("unknown function {name:?}"),
    }
}

/// `w1`..`w3` or `x1`..`x3` as `(letter, index)`.
fn indexed(name: &str) -> Option<(char, usize)> {
    let mut it = name.chars();
    let letter = it.next()?;
    let index = it.as_str().parse::<usize>().ok().filter(|i| (1..=3).contains(i))?;
    matches!(letter, 'w' | 'x').then_some((letter, index))
}

pub struct JvecEval(VectorType<Rational>);

impl Evaluator for JvecEval {
    type Alg = VectorType<Rational>;

    fn algebra(&self) -> &Self::Alg {
        &self.0
    }
    fn lift(&self, g: GammaEl) -> Result<VecElem<Rational>> {
        Ok(VecElem::even(g))
    }
    fn call(&self, name: &str, arg: GammaEl, pos: usize) -> Result<VecElem<Rational>> {
        match name {
            "bar" => Ok(VecElem::bar(arg)),
            _ => Err(unknown(name, pos)),
        }
    }
    fn generators(&self) -> &'static [&'static str] {
        &["1", "y", "x", "bar(1)", "bar(y)", "bar(x)"]
    }
}

pub struct JadeltaEval(JADelta<Rational>);

impl Evaluator for JadeltaEval {
    type Alg = JADelta<Rational>;

    fn algebra(&self) -> &Self::Alg {
        &self.0
    }
    fn lift(&self, g: GammaEl) -> Result<VecElem<Rational>> {
        require(&g, Space::A, "an even element")?;
        Ok(VecElem::even(g))
    }
    fn call(&self, name: &str, arg: GammaEl, pos: usize) -> Result<VecElem<Rational>> {
        match name {
            "bar" => {
                require(&arg, Space::M, "bar")?;
                Ok(VecElem::bar(arg))
            }
            _ => Err(unknown(name, pos)),
        }
    }
    fn generators(&self) -> &'static [&'static str] {
        &["1", "y^2", "x*y", "bar(x)", "bar(y)"]
    }
}

type CurveDouble = KantorDouble<DBracket<CurveCarrier<Rational>>>;

pub struct DoubleEval(CurveDouble);

impl Evaluator for DoubleEval {
    type Alg = CurveDouble;

    fn algebra(&self) -> &Self::Alg {
        &self.0
    }
    fn lift(&self, g: GammaEl) -> Result<<CurveDouble as SuperAlgebra>::Elem> {
        Ok(self.0.base(g))
    }
    fn call(&self, name: &str, arg: GammaEl, pos: usize) -> Result<<CurveDouble as SuperAlgebra>::Elem> {
        match name {
            "X" => Ok(self.0.dual(arg)),
            _ => Err(unknown(name, pos)),
        }
    }
    fn generators(&self) -> &'static [&'static str] {
        &["1", "y", "x", "X(1)", "X(y)", "X(x)"]
    }
}

pub struct CkEval(ChengKac<Rational>);

impl Evaluator for CkEval {
    type Alg = ChengKac<Rational>;

    fn algebra(&self) -> &Self::Alg {
        &self.0
    }
    fn lift(&self, g: GammaEl) -> Result<CkElem<Rational>> {
        if self.gck() {
            require(&g, Space::A, "an even element")?;
        }
        Ok(CkElem::scalar_part(g))
    }
    fn call(&self, name: &str, arg: GammaEl, pos: usize) -> Result<CkElem<Rational>> {
        let needs = |space| if self.gck() { require(&arg, space, name) } else { Ok(()) };
        match (name, indexed(name)) {
            ("bar", _) => {
                needs(Space::M)?;
                Ok(CkElem::bar(arg))
            }
            (_, Some(('w', i))) => {
                needs(Space::A)?;
                Ok(CkElem::w(i, arg))
            }
            (_, Some(('x', i))) => {
                needs(Space::M)?;
                Ok(CkElem::x(i, arg))
            }
            _ => Err(unknown(name, pos)),
        }
    }
    fn generators(&self) -> &'static [&'static str] {
        if self.gck() {
            &["1", "y^2", "x*y", "w1(1)", "w2(1)", "w3(1)", "bar(x)", "bar(y)", "x1(x)", "x2(x)", "x3(x)"]
        } else {
            &["1", "y", "x", "w1(1)", "w2(1)", "w3(1)", "bar(1)", "x1(1)", "x2(1)", "x3(1)"]
        }
    }
}

impl CkEval {
    fn gck(&self) -> bool {
        self.0.variant() == superjordan::constructions::CkVariant::Gck
    }
}

enum Value<E> {
    Gamma(GammaEl),
    Elem(E),
}

fn elem<V: Evaluator>(ev: &V, v: Value<<V::Alg as SuperAlgebra>::Elem>) -> Result<<V::Alg as SuperAlgebra>::Elem> {
    match v {
        Value::Gamma(g) => ev.lift(g),
        Value::Elem(e) => Ok(e),
    }
}

fn gamma_arg<E>(v: Value<E>, pos: usize, what: &str) -> Result<GammaEl> {
    match v {
        Value::Gamma(g) => Ok(g),
        Value::Elem(_) => Err(Error::Parse {
            pos,
            msg: format!("{what} takes a curve element built from x, y and numbers"),
        }),
    }
}

fn eval_node<V: Evaluator>(ev: &V, e: &Expr) -> Result<Value<<V::Alg as SuperAlgebra>::Elem>> {
    let h = ev.algebra();
    Ok(match e {
        Expr::Int(n) => Value::Gamma(GammaEl::constant(Rational::from_big(n.clone().into()))),
        Expr::Var { name, pos } => match name.as_str() {
            "x" => Value::Gamma(GammaEl::x()),
            "y" => Value::Gamma(GammaEl::y()),
            _ => {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: format!("unknown symbol {name:?}"),
                })
            }
        },
        Expr::Call { name, arg, pos } => {
            let arg = gamma_arg(eval_node(ev, arg)?, *pos, name)?;
            Value::Elem(ev.call(name, arg, *pos)?)
        }
        Expr::Neg(a) => match eval_node(ev, a)? {
            Value::Gamma(g) => Value::Gamma(-g),
            Value::Elem(x) => Value::Elem(h.neg(&x)),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sub = matches!(e, Expr::Sub(..));
            match (eval_node(ev, a)?, eval_node(ev, b)?) {
                (Value::Gamma(x), Value::Gamma(y)) => Value::Gamma(if sub { x - y } else { x + y }),
                (x, y) => {
                    let (x, y) = (elem(ev, x)?, elem(ev, y)?);
                    Value::Elem(if sub { h.sub(&x, &y) } else { h.add(&x, &y) })
                }
            }
        }
        Expr::Mul(a, b) => match (eval_node(ev, a)?, eval_node(ev, b)?) {
            (Value::Gamma(x), Value::Gamma(y)) => Value::Gamma(x * y),
            (x, y) => Value::Elem(h.mul(&elem(ev, x)?, &elem(ev, y)?)),
        },
        Expr::Div { lhs, rhs, pos } => {
            let d = match eval_node(ev, rhs)? {
                Value::Gamma(g) if g.degree() == superjordan::poly::Degree::Finite(0) => g.p().coeffs()[0].clone(),
                _ => {
                    return Err(Error::Parse {
                        pos: *pos,
                        msg: "can only divide by a nonzero number".into(),
                    })
                }
            };
            let inv = Rational::from_integer(1) / d;
            match eval_node(ev, lhs)? {
                Value::Gamma(g) => Value::Gamma(g.scale(&inv)),
                Value::Elem(x) => Value::Elem(h.scale(&x, &inv)),
            }
        }
        Expr::Pow { base, exp, pos } => {
            let g = gamma_arg(eval_node(ev, base)?, *pos, "^")?;
            Value::Gamma(g.pow(*exp))
        }
    })
}

/// Evaluates `text` and returns the canonical form of the result.
pub fn evaluate<V: Evaluator>(ev: &V, text: &str) -> Result<String> {
    let tree = expr::parse(text)?;
    let value = elem(ev, eval_node(ev, &tree)?)?;
    Ok(ev.algebra().describe(&value))
}

/// `(row, column, product)` for every pair of generators.
pub fn table<V: Evaluator>(ev: &V) -> Result<Vec<(String, String, String)>> {
    let gens = ev.generators();
    let mut out = Vec::new();
    for a in gens {
        for b in gens {
            out.push((a.to_string(), b.to_string(), evaluate(ev, &format!("({a}) * ({b})"))?));
        }
    }
    Ok(out)
}

/// Runs `f` with the evaluator of `c`.
pub fn with_evaluator<T>(c: Construction, f: impl EvalVisitor<Output = T>) -> T {
    match c {
        Construction::Jvec => f.visit(&JvecEval(VectorType::new())),
        Construction::Jadelta => f.visit(&JadeltaEval(JADelta::default())),
        Construction::Double => f.visit(&DoubleEval(kantor_double(DBracket::new(CurveCarrier::new())))),
        Construction::Ck => f.visit(&CkEval(ChengKac::ck())),
        Construction::Gck => f.visit(&CkEval(ChengKac::gck())),
    }
}

/// A computation generic over the evaluator type.
pub trait EvalVisitor {
    type Output;
    fn visit<V: Evaluator>(self, ev: &V) -> Self::Output;
}

struct Eval<'a>(&'a str);

impl EvalVisitor for Eval<'_> {
    type Output = Result<String>;
    fn visit<V: Evaluator>(self, ev: &V) -> Result<String> {
        evaluate(ev, self.0)
    }
}

struct Table;

impl EvalVisitor for Table {
    type Output = Result<Vec<(String, String, String)>>;
    fn visit<V: Evaluator>(self, ev: &V) -> Self::Output {
        table(ev)
    }
}

pub fn eval_in(c: Construction, text: &str) -> Result<String> {
    with_evaluator(c, Eval(text))
}

pub fn table_of(c: Construction) -> Result<Vec<(String, String, String)>> {
    with_evaluator(c, Table)
}
