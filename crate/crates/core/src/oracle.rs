//! Brute-force extraction of the hard part of an easy-hard specification.
//!
//! The oracle enumerates every candidate below the input, keeps those
//! satisfying the easy condition and returns the greatest one. It is slow
//! on purpose: it is the trusted baseline the combinators are compared to.

use std::fmt;

use crate::catalog::SpecName;
use crate::combinators::head_fails;
use crate::error::OracleError;
use crate::model::{all_satisfy, PairSeq, Pred, Seq, Universe};
use crate::orders::{is_prefix, Carrier, OrderDef, PairPrefix, Prefix, Sublist, Suffix};

/// The easy part of a specification: a decidable relation between a
/// candidate and the input.
type Holds<Y, X> = Box<dyn Fn(&Y, &X) -> bool + Send + Sync>;

pub struct EasyCondition<Y, X> {
    description: String,
    holds: Holds<Y, X>,
}

impl<Y, X> EasyCondition<Y, X> {
    pub fn new(
        description: impl Into<String>,
        holds: impl Fn(&Y, &X) -> bool + Send + Sync + 'static,
    ) -> Self {
        EasyCondition {
            description: description.into(),
            holds: Box::new(holds),
        }
    }

    pub fn holds(&self, candidate: &Y, input: &X) -> bool {
        (self.holds)(candidate, input)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl<Y, X> fmt::Debug for EasyCondition<Y, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EasyCondition")
            .field("description", &self.description)
            .finish_non_exhaustive()
    }
}

/// Every carrier element of `u` below `x`, in enumeration order.
pub fn candidates_below<O: OrderDef>(o: &O, x: &O::Elem, u: &Universe) -> Vec<O::Elem> {
    o.elements(u).into_iter().filter(|y| o.leq(y, x)).collect()
}

/// The greatest candidate satisfying `easy`.
///
/// Incomparable maxima are reported as [`OracleError::NoGreatest`]; they are
/// never broken by an arbitrary tie rule.
pub fn best_among<O: OrderDef>(
    o: &O,
    candidates: impl IntoIterator<Item = O::Elem>,
    easy: impl Fn(&O::Elem) -> bool,
) -> Result<O::Elem, OracleError> {
    let feasible: Vec<O::Elem> = candidates.into_iter().filter(|y| easy(y)).collect();
    if feasible.is_empty() {
        return Err(OracleError::EmptyCandidates);
    }
    if let Some(m) = feasible
        .iter()
        .find(|m| feasible.iter().all(|y| o.leq(y, m)))
    {
        return Ok(m.clone());
    }
    let maxima = feasible
        .iter()
        .filter(|m| !feasible.iter().any(|y| y != *m && o.leq(m, y)))
        .map(|m| m.to_value().to_string())
        .collect();
    Err(OracleError::NoGreatest { maxima })
}

/// Greatest `y ≤ x` (in `u`) with `easy(y, x)`.
pub fn best_under<O: OrderDef>(
    o: &O,
    easy: &EasyCondition<O::Elem, O::Elem>,
    x: &O::Elem,
    u: &Universe,
) -> Result<O::Elem, OracleError> {
    best_among(o, candidates_below(o, x, u), |y| easy.holds(y, x))
}

/// A fully applied combinator specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecCall {
    TakeWhile { p: Pred, xs: Seq },
    Take { n: usize, xs: Seq },
    Filter { p: Pred, xs: Seq },
    DropWhile { p: Pred, xs: Seq },
    Zip { xs: Seq, ys: Seq },
}

impl SpecCall {
    pub fn name(&self) -> SpecName {
        match self {
            SpecCall::TakeWhile { .. } => SpecName::TakeWhile,
            SpecCall::Take { .. } => SpecName::Take,
            SpecCall::Filter { .. } => SpecName::Filter,
            SpecCall::DropWhile { .. } => SpecName::DropWhile,
            SpecCall::Zip { .. } => SpecName::Zip,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecOutput {
    Seq(Seq),
    Pairs(PairSeq),
}

impl fmt::Display for SpecOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecOutput::Seq(s) => write!(f, "[{s}]"),
            SpecOutput::Pairs(z) => write!(f, "{z}"),
        }
    }
}

/// Evaluates a named specification by brute force.
///
/// Candidates are enumerated in the smallest universe containing the input.
pub fn oracle_spec(call: &SpecCall) -> Result<SpecOutput, OracleError> {
    match call {
        SpecCall::TakeWhile { p, xs } => oracle_take_while(*p, xs).map(SpecOutput::Seq),
        SpecCall::Take { n, xs } => oracle_take(*n, xs).map(SpecOutput::Seq),
        SpecCall::Filter { p, xs } => oracle_filter(*p, xs).map(SpecOutput::Seq),
        SpecCall::DropWhile { p, xs } => oracle_drop_while(*p, xs).map(SpecOutput::Seq),
        SpecCall::Zip { xs, ys } => oracle_zip(xs, ys).map(SpecOutput::Pairs),
    }
}

fn below<O: OrderDef<Elem = Seq>>(
    o: &O,
    xs: &Seq,
    easy: impl Fn(&Seq) -> bool,
) -> Result<Seq, OracleError> {
    let u = Universe::covering([xs]);
    best_among(o, candidates_below(o, xs, &u), easy)
}

/// Greatest prefix of `xs` all of whose elements satisfy `p`.
pub fn oracle_take_while(p: Pred, xs: &Seq) -> Result<Seq, OracleError> {
    below(&Prefix, xs, |ys| all_satisfy(p, ys))
}

/// Greatest prefix of `xs` of length at most `n`.
pub fn oracle_take(n: usize, xs: &Seq) -> Result<Seq, OracleError> {
    below(&Prefix, xs, |ys| ys.len() <= n)
}

/// Greatest sublist of `xs` all of whose elements satisfy `p`.
pub fn oracle_filter(p: Pred, xs: &Seq) -> Result<Seq, OracleError> {
    below(&Sublist, xs, |ys| all_satisfy(p, ys))
}

/// Greatest suffix of `xs` whose head fails `p`.
pub fn oracle_drop_while(p: Pred, xs: &Seq) -> Result<Seq, OracleError> {
    below(&Suffix, xs, |z| head_fails(p, z))
}

/// Greatest pair sequence whose projections are prefixes of `xs` and `ys`.
///
/// Pair sequences longer than the shorter input cannot project to
/// prefixes of both, so candidates stop at that length.
pub fn oracle_zip(xs: &Seq, ys: &Seq) -> Result<PairSeq, OracleError> {
    let mut u = Universe::covering([xs, ys]);
    u.max_len = xs.len().min(ys.len());
    best_among(&PairPrefix, PairSeq::enumerate(&u), |zs| {
        is_prefix(&zs.fst(), xs) && is_prefix(&zs.snd(), ys)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::Relation;

    fn s(ids: &[u8]) -> Seq {
        Seq::from_ids(ids)
    }

    fn even() -> Pred {
        Pred::from_members(&[0, 2, 4])
    }

    #[test]
    fn candidates_examples() {
        let xs = s(&[2, 4, 5]);
        let u = Universe::covering([&xs]);
        assert_eq!(
            candidates_below(&Prefix, &xs, &u),
            vec![s(&[]), s(&[2]), s(&[2, 4]), s(&[2, 4, 5])]
        );
        assert_eq!(candidates_below(&Sublist, &xs, &u).len(), 8);
        assert_eq!(
            candidates_below(&Prefix, &Seq::new(), &Universe::new(3, 2).unwrap()),
            vec![Seq::new()]
        );
    }

    #[test]
    fn best_under_examples() {
        let xs = s(&[2, 4, 5]);
        let u = Universe::covering([&xs]);
        let all_even = EasyCondition::new("all even", |ys: &Seq, _: &Seq| all_satisfy(even(), ys));
        assert_eq!(best_under(&Prefix, &all_even, &xs, &u), Ok(s(&[2, 4])));
        assert_eq!(
            best_under(&Prefix, &all_even, &Seq::new(), &u),
            Ok(Seq::new())
        );
        let all_odd = EasyCondition::new("all odd", |ys: &Seq, _: &Seq| {
            all_satisfy(Pred::from_members(&[1, 3, 5]), ys)
        });
        assert_eq!(best_under(&Sublist, &all_odd, &xs, &u), Ok(s(&[5])));
    }

    #[test]
    fn oracle_spec_examples() {
        let xs = s(&[2, 4, 5]);
        assert_eq!(
            oracle_spec(&SpecCall::Take {
                n: 2,
                xs: xs.clone()
            }),
            Ok(SpecOutput::Seq(s(&[2, 4])))
        );
        assert_eq!(
            oracle_spec(&SpecCall::DropWhile {
                p: even(),
                xs: xs.clone()
            }),
            Ok(SpecOutput::Seq(s(&[5])))
        );
        assert_eq!(
            oracle_spec(&SpecCall::Zip {
                xs: s(&[1, 2, 3]),
                ys: s(&[7, 8])
            }),
            Ok(SpecOutput::Pairs(PairSeq::from_ids(&[(1, 7), (2, 8)])))
        );
        assert_eq!(
            oracle_spec(&SpecCall::Filter {
                p: even(),
                xs: xs.clone()
            }),
            Ok(SpecOutput::Seq(s(&[2, 4])))
        );
        assert_eq!(
            oracle_spec(&SpecCall::TakeWhile { p: even(), xs }),
            Ok(SpecOutput::Seq(s(&[2, 4])))
        );
    }

    #[test]
    fn incomparable_maxima_are_an_error() {
        // under sublist, [1] and [2] are both maximal among the length-1 sublists
        let xs = s(&[1, 2]);
        let u = Universe::covering([&xs]);
        let short = EasyCondition::new("len <= 1", |ys: &Seq, _: &Seq| ys.len() <= 1);
        match best_under(&Sublist, &short, &xs, &u) {
            Err(OracleError::NoGreatest { maxima }) => {
                assert_eq!(maxima, vec!["[1]".to_string(), "[2]".to_string()])
            }
            other => panic!("expected NoGreatest, got {other:?}"),
        }
    }

    #[test]
    fn unsatisfiable_easy_part() {
        let u = Universe::new(2, 2).unwrap();
        let never = EasyCondition::new("never", |_: &Seq, _: &Seq| false);
        assert_eq!(
            best_under(&Prefix, &never, &s(&[1]), &u),
            Err(OracleError::EmptyCandidates)
        );
    }

    #[test]
    fn custom_orders_work_too() {
        let by_len = Relation::new("len", |a: &Seq, b: &Seq| a.len() <= b.len());
        let u = Universe::new(1, 3).unwrap();
        assert_eq!(best_among(&by_len, u.seqs(), |_| true), Ok(s(&[0, 0, 0])));
    }
}
