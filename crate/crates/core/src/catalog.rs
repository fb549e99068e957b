//! The built-in specifications and connections, addressable by name.
//!
//! Each of the five combinators is available as an easy-hard spec (its
//! pointwise form) and as a canonical connection. For `takeWhile`, `filter`
//! and `dropWhile` the lower adjoint is the inclusion of the sub-poset of
//! candidates satisfying the easy condition on their own, so there is one
//! connection per predicate.

use std::fmt;
use std::str::FromStr;

use crate::check::CheckOptions;
use crate::combinators::{
    drop_while, filter_p, head_fails, take_n, take_while, unzip_pair, zip_pair,
};
use crate::connections::{
    check_cancellation, check_canonical_gc, check_easy_hard, check_fusion, check_idempotent,
    check_indirect_equality, check_injective_adjoint, check_monotone, check_semi_inverse,
    CanonicalGC, EasyHardSpec, Input, Side,
};
use crate::error::CheckError;
use crate::model::{all_satisfy, Bounded, Pred, Seq, SeqPair, Universe};
use crate::oracle::{
    oracle_drop_while, oracle_filter, oracle_take, oracle_take_while, oracle_zip, EasyCondition,
};
use crate::orders::{
    is_prefix, is_sublist, is_suffix, BothPrefix, Carrier, OrderDef, OrderName, PairPrefix, Prefix,
    Product, Restricted, Sublist, Suffix,
};
use crate::report::{Binding, CheckReport, Value, Witness};

/// Input of the predicate-indexed combinators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PredInput {
    pub p: Pred,
    pub xs: Seq,
}

impl Input for PredInput {
    fn bindings(&self) -> Vec<Binding> {
        vec![
            Binding::new("p", Value::Pred(self.p)),
            Binding::new("xs", self.xs.to_value()),
        ]
    }
}

impl Input for Bounded {
    fn bindings(&self) -> Vec<Binding> {
        vec![
            Binding::new("n", Value::Nat(self.n)),
            Binding::new("xs", self.seq.to_value()),
        ]
    }
}

impl Input for SeqPair {
    fn bindings(&self) -> Vec<Binding> {
        vec![
            Binding::new("xs", self.0.to_value()),
            Binding::new("ys", self.1.to_value()),
        ]
    }
}

fn pred_inputs(u: &Universe) -> Vec<PredInput> {
    let xs: Vec<Seq> = u.seqs().collect();
    u.preds()
        .flat_map(|p| xs.iter().map(move |x| PredInput { p, xs: x.clone() }))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecName {
    TakeWhile,
    Take,
    Filter,
    DropWhile,
    Zip,
}

impl SpecName {
    pub const ALL: [SpecName; 5] = [
        SpecName::TakeWhile,
        SpecName::Take,
        SpecName::Filter,
        SpecName::DropWhile,
        SpecName::Zip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpecName::TakeWhile => "takeWhile",
            SpecName::Take => "take",
            SpecName::Filter => "filter",
            SpecName::DropWhile => "dropWhile",
            SpecName::Zip => "zip",
        }
    }
}

impl fmt::Display for SpecName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpecName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpecName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown spec {s:?}"))
    }
}

/// Which hard part a spec is checked with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Implementation {
    /// The combinators in [`crate::combinators`].
    Reference,
    /// The brute-force oracle.
    Oracle,
}

pub fn take_while_spec(imp: Implementation) -> EasyHardSpec<PredInput, Prefix> {
    EasyHardSpec::fallible(
        "takeWhile",
        EasyCondition::new("ys ≼ xs ∧ all p ys", |ys: &Seq, x: &PredInput| {
            is_prefix(ys, &x.xs) && all_satisfy(x.p, ys)
        }),
        Prefix,
        move |x: &PredInput| match imp {
            Implementation::Reference => Ok(take_while(x.p, &x.xs)),
            Implementation::Oracle => oracle_take_while(x.p, &x.xs),
        },
        pred_inputs,
    )
}

/// Inputs range over `n ∈ 0..=L+1`, so one bound exceeds every length.
pub fn take_spec(imp: Implementation) -> EasyHardSpec<Bounded, Prefix> {
    EasyHardSpec::fallible(
        "take",
        EasyCondition::new("length ys ≤ n ∧ ys ≼ xs", |ys: &Seq, x: &Bounded| {
            ys.len() <= x.n && is_prefix(ys, &x.seq)
        }),
        Prefix,
        move |x: &Bounded| match imp {
            Implementation::Reference => Ok(take_n(x.n, &x.seq)),
            Implementation::Oracle => oracle_take(x.n, &x.seq),
        },
        |u: &Universe| Bounded::enumerate(u),
    )
}

pub fn filter_spec(imp: Implementation) -> EasyHardSpec<PredInput, Sublist> {
    EasyHardSpec::fallible(
        "filter",
        EasyCondition::new("ys ⊑ xs ∧ all p ys", |ys: &Seq, x: &PredInput| {
            is_sublist(ys, &x.xs) && all_satisfy(x.p, ys)
        }),
        Sublist,
        move |x: &PredInput| match imp {
            Implementation::Reference => Ok(filter_p(x.p, &x.xs)),
            Implementation::Oracle => oracle_filter(x.p, &x.xs),
        },
        pred_inputs,
    )
}

pub fn drop_while_spec(imp: Implementation) -> EasyHardSpec<PredInput, Suffix> {
    EasyHardSpec::fallible(
        "dropWhile",
        EasyCondition::new(
            "headFails p z ∧ z is a suffix of l",
            |z: &Seq, x: &PredInput| head_fails(x.p, z) && is_suffix(z, &x.xs),
        ),
        Suffix,
        move |x: &PredInput| match imp {
            Implementation::Reference => Ok(drop_while(x.p, &x.xs)),
            Implementation::Oracle => oracle_drop_while(x.p, &x.xs),
        },
        pred_inputs,
    )
}

pub fn zip_spec(imp: Implementation) -> EasyHardSpec<SeqPair, PairPrefix> {
    EasyHardSpec::fallible(
        "zip",
        EasyCondition::new(
            "map fst zs ≼ xs ∧ map snd zs ≼ ys",
            |zs: &crate::model::PairSeq, x: &SeqPair| {
                is_prefix(&zs.fst(), &x.0) && is_prefix(&zs.snd(), &x.1)
            },
        ),
        PairPrefix,
        move |x: &SeqPair| match imp {
            Implementation::Reference => Ok(zip_pair(&x.0, &x.1)),
            Implementation::Oracle => oracle_zip(&x.0, &x.1),
        },
        |u: &Universe| SeqPair::enumerate(u),
    )
}

/// `check_easy_hard` for a named spec.
pub fn check_spec(
    name: SpecName,
    imp: Implementation,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    match name {
        SpecName::TakeWhile => check_easy_hard(&take_while_spec(imp), u, opts),
        SpecName::Take => check_easy_hard(&take_spec(imp), u, opts),
        SpecName::Filter => check_easy_hard(&filter_spec(imp), u, opts),
        SpecName::DropWhile => check_easy_hard(&drop_while_spec(imp), u, opts),
        SpecName::Zip => check_easy_hard(&zip_spec(imp), u, opts),
    }
}

/// Connections selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connection {
    Spec(SpecName),
    Identity,
    WordsUnwords,
    LinesUnlines,
}

impl Connection {
    pub const ALL: [Connection; 8] = [
        Connection::Spec(SpecName::TakeWhile),
        Connection::Spec(SpecName::Take),
        Connection::Spec(SpecName::Filter),
        Connection::Spec(SpecName::DropWhile),
        Connection::Spec(SpecName::Zip),
        Connection::Identity,
        Connection::WordsUnwords,
        Connection::LinesUnlines,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Connection::Spec(s) => s.as_str(),
            Connection::Identity => "identity",
            Connection::WordsUnwords => "words-unwords",
            Connection::LinesUnlines => "lines-unlines",
        }
    }
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Connection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Connection::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown connection {s:?}"))
    }
}

/// Laws derivable from (or defining) a canonical connection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GcLaw {
    Gc,
    CancellationLeft,
    CancellationRight,
    SemiInverse,
    InjectiveAdjoint,
    Monotone,
}

impl GcLaw {
    pub const ALL: [GcLaw; 6] = [
        GcLaw::Gc,
        GcLaw::CancellationLeft,
        GcLaw::CancellationRight,
        GcLaw::SemiInverse,
        GcLaw::InjectiveAdjoint,
        GcLaw::Monotone,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GcLaw::Gc => "gc",
            GcLaw::CancellationLeft => "cancellation-left",
            GcLaw::CancellationRight => "cancellation-right",
            GcLaw::SemiInverse => "semi-inverse",
            GcLaw::InjectiveAdjoint => "injective-adjoint",
            GcLaw::Monotone => "monotone",
        }
    }

    pub fn check<OA: OrderDef, OB: OrderDef>(
        self,
        c: &CanonicalGC<OA, OB>,
        u: &Universe,
        opts: &CheckOptions,
    ) -> Result<CheckReport, CheckError> {
        match self {
            GcLaw::Gc => check_canonical_gc(c, u, opts),
            GcLaw::CancellationLeft => check_cancellation(c, u, Side::Left, opts),
            GcLaw::CancellationRight => check_cancellation(c, u, Side::Right, opts),
            GcLaw::SemiInverse => check_semi_inverse(c, u, opts),
            GcLaw::InjectiveAdjoint => check_injective_adjoint(c, u, opts),
            GcLaw::Monotone => check_monotone(c, u, opts),
        }
    }
}

/// `f = inclusion of {ys : keep(p, ys)}`, `g = combinator p`, ordered by `order` on both sides.
pub fn inclusion_gc<O>(
    name: &str,
    order: O,
    p: Pred,
    keep: fn(Pred, &Seq) -> bool,
    g: fn(Pred, &Seq) -> Seq,
) -> CanonicalGC<O, Restricted<O, impl Fn(&Seq) -> bool + Sync>>
where
    O: OrderDef<Elem = Seq> + Clone,
{
    let sub = Restricted::new(
        order.clone(),
        format!("{}|{}", order.name(), p),
        move |ys: &Seq| keep(p, ys),
    );
    CanonicalGC::new(
        format!("{name}[p={p}]"),
        |y: &Seq| y.clone(),
        move |x: &Seq| g(p, x),
        order,
        sub,
    )
}

pub fn take_while_gc(p: Pred) -> CanonicalGC<Prefix, impl OrderDef<Elem = Seq>> {
    inclusion_gc("takeWhile", Prefix, p, all_satisfy, take_while)
}

pub fn filter_gc(p: Pred) -> CanonicalGC<Sublist, impl OrderDef<Elem = Seq>> {
    inclusion_gc("filter", Sublist, p, all_satisfy, filter_p)
}

pub fn drop_while_gc(p: Pred) -> CanonicalGC<Suffix, impl OrderDef<Elem = Seq>> {
    inclusion_gc("dropWhile", Suffix, p, head_fails, drop_while)
}

/// `(length ys, ys) ≤ (n, xs) ⇔ ys ≼ take n xs`.
pub fn take_gc() -> CanonicalGC<Product, Prefix> {
    CanonicalGC::new(
        "take",
        |ys: &Seq| Bounded::new(ys.len(), ys.clone()),
        |b: &Bounded| take_n(b.n, &b.seq),
        Product,
        Prefix,
    )
}

/// `unzip zs ≤ (xs, ys) ⇔ zs ≼ zip xs ys`.
pub fn zip_gc() -> CanonicalGC<BothPrefix, PairPrefix> {
    CanonicalGC::new(
        "zip",
        |zs: &crate::model::PairSeq| {
            let (a, b) = unzip_pair(zs);
            SeqPair(a, b)
        },
        |x: &SeqPair| zip_pair(&x.0, &x.1),
        BothPrefix,
        PairPrefix,
    )
}

pub fn identity_gc() -> CanonicalGC<Prefix, Prefix> {
    CanonicalGC::new(
        "identity",
        |y: &Seq| y.clone(),
        |x: &Seq| x.clone(),
        Prefix,
        Prefix,
    )
}

/// Runs `law` once per predicate, stopping at the first failure.
fn per_pred<OA, OB>(
    law: GcLaw,
    label: String,
    build: impl Fn(Pred) -> CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError>
where
    OA: OrderDef,
    OB: OrderDef,
{
    let mut parts = Vec::new();
    let mut spent = 0;
    for p in u.preds() {
        let r = law
            .check(&build(p), u, &opts.after(spent))?
            .with_context(&[Binding::new("p", Value::Pred(p))]);
        spent += r.evaluations;
        let stop = !r.passed();
        parts.push(r);
        if stop {
            break;
        }
    }
    Ok(CheckReport::combine(label, parts))
}

/// Checks one law of a named connection; predicate-indexed connections
/// are checked for every predicate of `u`.
pub fn check_connection(
    conn: Connection,
    law: GcLaw,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let label = format!("{}:{}", law.as_str(), conn);
    let report = match conn {
        Connection::Spec(SpecName::TakeWhile) => per_pred(law, label, take_while_gc, u, opts)?,
        Connection::Spec(SpecName::Filter) => per_pred(law, label, filter_gc, u, opts)?,
        Connection::Spec(SpecName::DropWhile) => per_pred(law, label, drop_while_gc, u, opts)?,
        Connection::Spec(SpecName::Take) => law.check(&take_gc(), u, opts)?,
        Connection::Spec(SpecName::Zip) => law.check(&zip_gc(), u, opts)?,
        Connection::Identity => law.check(&identity_gc(), u, opts)?,
        Connection::WordsUnwords => law.check(
            &crate::connections::NonGcPair::WordsUnwords.connection(),
            u,
            opts,
        )?,
        Connection::LinesUnlines => law.check(
            &crate::connections::NonGcPair::LinesUnlines.connection(),
            u,
            opts,
        )?,
    };
    Ok(CheckReport {
        law: format!("{}:{}", law.as_str(), conn),
        ..report
    })
}

/// Law suites runnable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LawName {
    Connection(GcLaw),
    Idempotent,
    Fusion,
    IndirectEquality,
    OrderLaws,
    SplitAppend,
}

impl LawName {
    pub const ALL: [LawName; 10] = [
        LawName::Connection(GcLaw::Gc),
        LawName::Connection(GcLaw::CancellationLeft),
        LawName::Connection(GcLaw::CancellationRight),
        LawName::Connection(GcLaw::SemiInverse),
        LawName::Connection(GcLaw::InjectiveAdjoint),
        LawName::Idempotent,
        LawName::Fusion,
        LawName::IndirectEquality,
        LawName::OrderLaws,
        LawName::SplitAppend,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawName::Connection(l) => l.as_str(),
            LawName::Idempotent => "idempotent",
            LawName::Fusion => "fusion",
            LawName::IndirectEquality => "indirect-equality",
            LawName::OrderLaws => "order-laws",
            LawName::SplitAppend => "split-append",
        }
    }
}

impl fmt::Display for LawName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LawName::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown law {s:?}"))
    }
}

/// `take_while(p, xs) ++ drop_while(p, xs) = xs` for all `p`, `xs`.
pub fn check_split_append(u: &Universe, opts: &CheckOptions) -> Result<CheckReport, CheckError> {
    let started = std::time::Instant::now();
    let inputs = pred_inputs(u);
    opts.ensure(inputs.len() as u64)?;
    let hit = opts.first_violation(&inputs, |x| {
        let joined = take_while(x.p, &x.xs).concat(&drop_while(x.p, &x.xs));
        (joined != x.xs).then_some(joined)
    })?;
    let law = "split-append";
    let report = match hit {
        None => CheckReport::pass(law, inputs.len() as u64),
        Some((i, joined)) => CheckReport::fail(
            law,
            i as u64 + 1,
            Witness::new(law)
                .bind_all(inputs[i].bindings())
                .bind("joined", joined.to_value()),
        ),
    };
    Ok(report.charged(inputs.len() as u64).timed(started.elapsed()))
}

/// Idempotency of `takeWhile p`, `filter p` and `dropWhile p` for every `p`.
pub fn check_idempotent_combinators(
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    type Combinator = fn(Pred, &Seq) -> Seq;
    let combinators: [(&str, Combinator); 3] = [
        ("takeWhile", take_while),
        ("filter", filter_p),
        ("dropWhile", drop_while),
    ];
    let mut parts = Vec::new();
    let mut spent = 0;
    'outer: for (name, h) in combinators {
        for p in u.preds() {
            let r = check_idempotent(name, |x: &Seq| h(p, x), u, &opts.after(spent))?
                .with_context(&[Binding::new("p", Value::Pred(p))]);
            spent += r.evaluations;
            let stop = !r.passed();
            parts.push(r);
            if stop {
                break 'outer;
            }
        }
    }
    Ok(CheckReport::combine("idempotent", parts))
}

/// Runs a named law suite over every built-in subject it applies to.
pub fn check_law(
    law: LawName,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let mut parts = Vec::new();
    let mut spent = 0;
    let mut push = |r: CheckReport, spent: &mut u64| {
        *spent += r.evaluations;
        let stop = !r.passed();
        parts.push(r);
        stop
    };
    match law {
        LawName::Connection(gc_law) => {
            for spec in SpecName::ALL {
                let r = check_connection(Connection::Spec(spec), gc_law, u, &opts.after(spent))?;
                if push(r, &mut spent) {
                    break;
                }
            }
        }
        LawName::IndirectEquality => {
            for order in OrderName::ALL {
                let o = &opts.after(spent);
                let r = match order {
                    OrderName::Prefix => check_indirect_equality(&Prefix, u, o)?,
                    OrderName::Sublist => check_indirect_equality(&Sublist, u, o)?,
                    OrderName::Suffix => check_indirect_equality(&Suffix, u, o)?,
                    OrderName::Product => check_indirect_equality(&Product, u, o)?,
                    OrderName::PairPrefix => check_indirect_equality(&PairPrefix, u, o)?,
                };
                if push(r, &mut spent) {
                    break;
                }
            }
        }
        LawName::OrderLaws => {
            for order in OrderName::ALL {
                let r = order.check_laws(u, &opts.after(spent))?.summary();
                if push(r, &mut spent) {
                    break;
                }
            }
        }
        LawName::Idempotent => return check_idempotent_combinators(u, opts),
        LawName::Fusion => return check_fusion(u, opts),
        LawName::SplitAppend => return check_split_append(u, opts),
    }
    Ok(CheckReport::combine(law.as_str(), parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn take_while_spec_case_count() {
        let u = Universe::new(2, 4).unwrap();
        let r = check_spec(
            SpecName::TakeWhile,
            Implementation::Reference,
            &u,
            &CheckOptions::default(),
        )
        .unwrap();
        assert!(r.passed());
        assert_eq!(r.cases_checked, 4 * 31 * 31);
    }

    #[test]
    fn filter_spec_passes() {
        let u = Universe::new(2, 4).unwrap();
        assert!(check_spec(
            SpecName::Filter,
            Implementation::Reference,
            &u,
            &CheckOptions::default()
        )
        .unwrap()
        .passed());
    }

    #[test]
    fn wrong_filter_is_caught() {
        let u = Universe::new(2, 3).unwrap();
        // takeWhile is not the greatest sublist
        let spec = EasyHardSpec::new(
            "filter(takeWhile)",
            EasyCondition::new("ys ⊑ xs ∧ all p ys", |ys: &Seq, x: &PredInput| {
                is_sublist(ys, &x.xs) && all_satisfy(x.p, ys)
            }),
            Sublist,
            |x: &PredInput| take_while(x.p, &x.xs),
            pred_inputs,
        );
        let r = check_easy_hard(&spec, &u, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.counterexample.unwrap();
        assert_eq!(w.get("easy"), Some(&Value::Bool(true)));
    }

    #[test]
    fn zip_connection_laws() {
        let u = Universe::new(2, 3).unwrap();
        let opts = CheckOptions::default();
        for law in GcLaw::ALL {
            let r = check_connection(Connection::Spec(SpecName::Zip), law, &u, &opts).unwrap();
            assert!(r.passed(), "{}", r.law);
        }
    }

    #[test]
    fn words_unwords_is_not_a_connection() {
        let u = Universe::new(2, 4).unwrap();
        let r = check_connection(
            Connection::WordsUnwords,
            GcLaw::Gc,
            &u,
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let r = check_connection(
            Connection::WordsUnwords,
            GcLaw::SemiInverse,
            &u,
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn law_names_round_trip() {
        for law in LawName::ALL {
            assert_eq!(law.as_str().parse::<LawName>().unwrap(), law);
        }
        for c in Connection::ALL {
            assert_eq!(c.as_str().parse::<Connection>().unwrap(), c);
        }
        assert!("monotone".parse::<LawName>().is_err());
    }
}
