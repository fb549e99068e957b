//! Galois-connection checking engine and the laws that follow from a
//! connection.
//!
//! Two forms are supported. An [`EasyHardSpec`] is the pointwise form
//! `easy(y, x) ⇔ y ≤ hard(x)`; a [`CanonicalGC`] is the two-function form
//! `f(y) ≤_A x ⇔ y ≤_B g(x)`. Every check quantifies over carriers
//! enumerated from a [`Universe`] and reports the first violation in
//! enumeration order (outermost quantifier first).

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use crate::check::{product, CheckOptions};
use crate::combinators::{
    filter_p, lines_split, take_while, unlines_join, unwords_join, words_split,
};
use crate::error::{CheckError, OracleError};
use crate::model::{pred_and, Pred, Seq, Universe};
use crate::oracle::EasyCondition;
use crate::orders::{Carrier, ListPrefix, OrderDef, Prefix};
use crate::report::{Binding, CheckReport, Value, Witness};

/// An input to a specification, reported as one or more named bindings.
pub trait Input: Send + Sync {
    fn bindings(&self) -> Vec<Binding>;
}

impl Input for Seq {
    fn bindings(&self) -> Vec<Binding> {
        vec![Binding::new("x", self.to_value())]
    }
}

type Hard<X, Y> = Box<dyn Fn(&X) -> Result<Y, OracleError> + Send + Sync>;
type Inputs<X> = Box<dyn Fn(&Universe) -> Vec<X> + Send + Sync>;

/// `easy(y, x) ⇔ y ≤ hard(x)` for all inputs `x` and candidates `y`.
pub struct EasyHardSpec<X, O: OrderDef> {
    pub name: String,
    pub easy: EasyCondition<O::Elem, X>,
    pub order: O,
    hard: Hard<X, O::Elem>,
    inputs: Inputs<X>,
}

impl<X: Input, O: OrderDef> EasyHardSpec<X, O> {
    pub fn new(
        name: impl Into<String>,
        easy: EasyCondition<O::Elem, X>,
        order: O,
        hard: impl Fn(&X) -> O::Elem + Send + Sync + 'static,
        inputs: impl Fn(&Universe) -> Vec<X> + Send + Sync + 'static,
    ) -> Self {
        Self::fallible(name, easy, order, move |x| Ok(hard(x)), inputs)
    }

    /// A spec whose hard part may be undefined, e.g. an oracle.
    pub fn fallible(
        name: impl Into<String>,
        easy: EasyCondition<O::Elem, X>,
        order: O,
        hard: impl Fn(&X) -> Result<O::Elem, OracleError> + Send + Sync + 'static,
        inputs: impl Fn(&Universe) -> Vec<X> + Send + Sync + 'static,
    ) -> Self {
        EasyHardSpec {
            name: name.into(),
            easy,
            order,
            hard: Box::new(hard),
            inputs: Box::new(inputs),
        }
    }

    pub fn hard(&self, x: &X) -> Result<O::Elem, OracleError> {
        (self.hard)(x)
    }

    pub fn inputs(&self, u: &Universe) -> Vec<X> {
        (self.inputs)(u)
    }
}

/// Checks `∀x ∀y: easy(y, x) ⇔ y ≤ hard(x)`.
pub fn check_easy_hard<X: Input, O: OrderDef>(
    spec: &EasyHardSpec<X, O>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let inputs = spec.inputs(u);
    let candidates = spec.order.elements(u);
    let total = product(inputs.len(), candidates.len());
    opts.ensure(total)?;

    let hards: Vec<Result<O::Elem, OracleError>> = opts.map_all(&inputs, |x| spec.hard(x))?;
    let jobs: Vec<(&X, O::Elem)> = inputs
        .iter()
        .zip(hards)
        .map(|(x, h)| h.map(|h| (x, h)))
        .collect::<Result<_, _>>()?;

    let hit = opts.first_violation(&jobs, |(x, h)| {
        candidates.iter().enumerate().find_map(|(j, y)| {
            let easy = spec.easy.holds(y, x);
            let below = spec.order.leq(y, h);
            (easy != below).then_some((j, easy, below))
        })
    })?;

    let law = format!("easy-hard:{}", spec.name);
    let report = match hit {
        None => CheckReport::pass(law, total),
        Some((i, (j, easy, below))) => {
            let (x, h) = &jobs[i];
            let witness = Witness::new(law.clone())
                .bind_all(x.bindings())
                .bind("y", candidates[j].to_value())
                .bind("hard", h.to_value())
                .bind("easy", Value::Bool(easy))
                .bind("below-hard", Value::Bool(below));
            CheckReport::fail(law, (i * candidates.len() + j) as u64 + 1, witness)
        }
    };
    Ok(report.charged(total).timed(started.elapsed()))
}

type Adjoint<S, T> = Box<dyn Fn(&S) -> T + Send + Sync>;

/// `f(y) ≤_A x ⇔ y ≤_B g(x)` with `f: B → A` (lower adjoint) and
/// `g: A → B` (upper adjoint).
pub struct CanonicalGC<OA: OrderDef, OB: OrderDef> {
    pub name: String,
    f: Adjoint<OB::Elem, OA::Elem>,
    g: Adjoint<OA::Elem, OB::Elem>,
    pub order_a: OA,
    pub order_b: OB,
}

impl<OA: OrderDef, OB: OrderDef> CanonicalGC<OA, OB> {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&OB::Elem) -> OA::Elem + Send + Sync + 'static,
        g: impl Fn(&OA::Elem) -> OB::Elem + Send + Sync + 'static,
        order_a: OA,
        order_b: OB,
    ) -> Self {
        CanonicalGC {
            name: name.into(),
            f: Box::new(f),
            g: Box::new(g),
            order_a,
            order_b,
        }
    }

    pub fn f(&self, y: &OB::Elem) -> OA::Elem {
        (self.f)(y)
    }

    pub fn g(&self, x: &OA::Elem) -> OB::Elem {
        (self.g)(x)
    }
}

impl<OA: OrderDef, OB: OrderDef> fmt::Debug for CanonicalGC<OA, OB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CanonicalGC")
            .field("name", &self.name)
            .field("order_a", &self.order_a.name())
            .field("order_b", &self.order_b.name())
            .finish_non_exhaustive()
    }
}

/// Checks the connection itself: `∀x ∈ A ∀y ∈ B: f(y) ≤ x ⇔ y ≤ g(x)`.
pub fn check_canonical_gc<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let xs = c.order_a.elements(u);
    let ys = c.order_b.elements(u);
    let total = product(xs.len(), ys.len());
    opts.ensure(total)?;
    let fys = opts.map_all(&ys, |y| c.f(y))?;

    let hit = opts.first_violation(&xs, |x| {
        let gx = c.g(x);
        ys.iter().zip(&fys).enumerate().find_map(|(j, (y, fy))| {
            let lower = c.order_a.leq(fy, x);
            let upper = c.order_b.leq(y, &gx);
            (lower != upper).then(|| (j, gx.clone(), lower))
        })
    })?;

    let law = format!("gc:{}", c.name);
    let report = match hit {
        None => CheckReport::pass(law, total),
        Some((i, (j, gx, lower))) => {
            let witness = Witness::new(law.clone())
                .bind("x", xs[i].to_value())
                .bind("y", ys[j].to_value())
                .bind("f(y)", fys[j].to_value())
                .bind("g(x)", gx.to_value())
                .bind("f(y)<=x", Value::Bool(lower))
                .bind("y<=g(x)", Value::Bool(!lower));
            CheckReport::fail(law, (i * ys.len() + j) as u64 + 1, witness)
        }
    };
    Ok(report.charged(total).timed(started.elapsed()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `f(g(x)) ≤_A x`
    Left,
    /// `y ≤_B g(f(y))`
    Right,
}

/// The round-trip inequalities of a connection.
pub fn check_cancellation<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    side: Side,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let report = match side {
        Side::Left => {
            let law = format!("cancellation-left:{}", c.name);
            let xs = c.order_a.elements(u);
            opts.ensure(xs.len() as u64)?;
            let hit = opts.first_violation(&xs, |x| {
                let fgx = c.f(&c.g(x));
                (!c.order_a.leq(&fgx, x)).then_some(fgx)
            })?;
            match hit {
                None => CheckReport::pass(law, xs.len() as u64),
                Some((i, fgx)) => CheckReport::fail(
                    law.clone(),
                    i as u64 + 1,
                    Witness::new(law)
                        .bind("x", xs[i].to_value())
                        .bind("f(g(x))", fgx.to_value()),
                ),
            }
            .charged(xs.len() as u64)
        }
        Side::Right => {
            let law = format!("cancellation-right:{}", c.name);
            let ys = c.order_b.elements(u);
            opts.ensure(ys.len() as u64)?;
            let hit = opts.first_violation(&ys, |y| {
                let gfy = c.g(&c.f(y));
                (!c.order_b.leq(y, &gfy)).then_some(gfy)
            })?;
            match hit {
                None => CheckReport::pass(law, ys.len() as u64),
                Some((i, gfy)) => CheckReport::fail(
                    law.clone(),
                    i as u64 + 1,
                    Witness::new(law)
                        .bind("y", ys[i].to_value())
                        .bind("g(f(y))", gfy.to_value()),
                ),
            }
            .charged(ys.len() as u64)
        }
    };
    Ok(report.timed(started.elapsed()))
}

/// `g ∘ f ∘ g = g` over `A`.
pub fn check_gfg<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let law = format!("semi-inverse-gfg:{}", c.name);
    let xs = c.order_a.elements(u);
    opts.ensure(xs.len() as u64)?;
    let hit = opts.first_violation(&xs, |x| {
        let gx = c.g(x);
        let gfgx = c.g(&c.f(&gx));
        (gfgx != gx).then_some((gx, gfgx))
    })?;
    Ok(match hit {
        None => CheckReport::pass(law, xs.len() as u64),
        Some((i, (gx, gfgx))) => CheckReport::fail(
            law.clone(),
            i as u64 + 1,
            Witness::new(law)
                .bind("x", xs[i].to_value())
                .bind("g(x)", gx.to_value())
                .bind("g(f(g(x)))", gfgx.to_value()),
        ),
    }
    .charged(xs.len() as u64))
}

/// `f ∘ g ∘ f = f` over `B`.
pub fn check_fgf<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let law = format!("semi-inverse-fgf:{}", c.name);
    let ys = c.order_b.elements(u);
    opts.ensure(ys.len() as u64)?;
    let hit = opts.first_violation(&ys, |y| {
        let fy = c.f(y);
        let fgfy = c.f(&c.g(&fy));
        (fgfy != fy).then_some((fy, fgfy))
    })?;
    Ok(match hit {
        None => CheckReport::pass(law, ys.len() as u64),
        Some((i, (fy, fgfy))) => CheckReport::fail(
            law.clone(),
            i as u64 + 1,
            Witness::new(law)
                .bind("y", ys[i].to_value())
                .bind("f(y)", fy.to_value())
                .bind("f(g(f(y)))", fgfy.to_value()),
        ),
    }
    .charged(ys.len() as u64))
}

/// Both semi-inverse equalities, `g ∘ f ∘ g = g` first.
pub fn check_semi_inverse<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let gfg = check_gfg(c, u, opts)?;
    let fgf = check_fgf(c, u, &opts.after(gfg.evaluations))?;
    Ok(
        CheckReport::combine(format!("semi-inverse:{}", c.name), [gfg, fgf])
            .timed(started.elapsed()),
    )
}

/// `g(f(y)) = y` for injective `f`; not applicable (with the colliding
/// pair as witness) when `f` is not injective on `B`.
pub fn check_injective_adjoint<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let law = format!("injective-adjoint:{}", c.name);
    let ys = c.order_b.elements(u);
    let n = ys.len() as u64;
    opts.ensure(2 * n)?;
    let fys = opts.map_all(&ys, |y| c.f(y))?;

    let mut seen: HashMap<&OA::Elem, usize> = HashMap::with_capacity(ys.len());
    for (j, fy) in fys.iter().enumerate() {
        if let Some(&i) = seen.get(fy) {
            let witness = Witness::new(format!("injectivity:{}", c.name))
                .bind("y1", ys[i].to_value())
                .bind("y2", ys[j].to_value())
                .bind("f(y)", fy.to_value());
            return Ok(CheckReport::not_applicable(law, j as u64 + 1, witness)
                .charged(n)
                .timed(started.elapsed()));
        }
        seen.insert(fy, j);
    }

    let idx: Vec<usize> = (0..ys.len()).collect();
    let hit = opts.first_violation(&idx, |&j| {
        let gfy = c.g(&fys[j]);
        (gfy != ys[j]).then_some(gfy)
    })?;
    let report = match hit {
        None => CheckReport::pass(law, 2 * n),
        Some((j, gfy)) => CheckReport::fail(
            law.clone(),
            n + j as u64 + 1,
            Witness::new(law)
                .bind("y", ys[j].to_value())
                .bind("g(f(y))", gfy.to_value()),
        ),
    };
    Ok(report.charged(2 * n).timed(started.elapsed()))
}

/// Both adjoints are monotone: `y1 ≤ y2 ⇒ f(y1) ≤ f(y2)` and
/// `x1 ≤ x2 ⇒ g(x1) ≤ g(x2)`.
pub fn check_monotone<OA: OrderDef, OB: OrderDef>(
    c: &CanonicalGC<OA, OB>,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let xs = c.order_a.elements(u);
    let ys = c.order_b.elements(u);
    let cost_f = product(ys.len(), ys.len());
    let cost_g = product(xs.len(), xs.len());
    opts.ensure(cost_f.saturating_add(cost_g))?;

    let fys = opts.map_all(&ys, |y| c.f(y))?;
    let f_law = format!("monotone-f:{}", c.name);
    let idx: Vec<usize> = (0..ys.len().max(xs.len())).collect();
    let hit = opts.first_violation(&idx[..ys.len()], |&i| {
        ys.iter().enumerate().find_map(|(j, y2)| {
            (c.order_b.leq(&ys[i], y2) && !c.order_a.leq(&fys[i], &fys[j])).then_some(j)
        })
    })?;
    let f_report = match hit {
        None => CheckReport::pass(f_law, cost_f),
        Some((i, j)) => CheckReport::fail(
            f_law.clone(),
            (i * ys.len() + j) as u64 + 1,
            Witness::new(f_law)
                .bind("y1", ys[i].to_value())
                .bind("y2", ys[j].to_value()),
        ),
    }
    .charged(cost_f);

    let gxs = opts.map_all(&xs, |x| c.g(x))?;
    let g_law = format!("monotone-g:{}", c.name);
    let hit = opts.first_violation(&idx[..xs.len()], |&i| {
        xs.iter().enumerate().find_map(|(j, x2)| {
            (c.order_a.leq(&xs[i], x2) && !c.order_b.leq(&gxs[i], &gxs[j])).then_some(j)
        })
    })?;
    let g_report = match hit {
        None => CheckReport::pass(g_law, cost_g),
        Some((i, j)) => CheckReport::fail(
            g_law.clone(),
            (i * xs.len() + j) as u64 + 1,
            Witness::new(g_law)
                .bind("x1", xs[i].to_value())
                .bind("x2", xs[j].to_value()),
        ),
    }
    .charged(cost_g);

    Ok(
        CheckReport::combine(format!("monotone:{}", c.name), [f_report, g_report])
            .timed(started.elapsed()),
    )
}

/// `h(h(x)) = h(x)` for every sequence in `u`.
pub fn check_idempotent(
    name: &str,
    h: impl Fn(&Seq) -> Seq + Sync,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let law = format!("idempotent:{name}");
    let xs: Vec<Seq> = u.seqs().collect();
    opts.ensure(xs.len() as u64)?;
    let hit = opts.first_violation(&xs, |x| {
        let hx = h(x);
        let hhx = h(&hx);
        (hhx != hx).then_some((hx, hhx))
    })?;
    let report = match hit {
        None => CheckReport::pass(law, xs.len() as u64),
        Some((i, (hx, hhx))) => CheckReport::fail(
            law.clone(),
            i as u64 + 1,
            Witness::new(law)
                .bind("x", xs[i].to_value())
                .bind("h(x)", hx.to_value())
                .bind("h(h(x))", hhx.to_value()),
        ),
    };
    Ok(report.charged(xs.len() as u64).timed(started.elapsed()))
}

/// `h p (h q xs) = h (p ∧ q) xs` for all predicate pairs and sequences.
pub fn check_fusion_of(
    name: &str,
    h: impl Fn(Pred, &Seq) -> Seq + Sync,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let law = format!("fusion:{name}");
    let preds: Vec<Pred> = u.preds().collect();
    let pairs: Vec<(Pred, Pred)> = preds
        .iter()
        .flat_map(|&p| preds.iter().map(move |&q| (p, q)))
        .collect();
    let xs: Vec<Seq> = u.seqs().collect();
    let total = product(pairs.len(), xs.len());
    opts.ensure(total)?;
    let hit = opts.first_violation(&pairs, |&(p, q)| {
        xs.iter().enumerate().find_map(|(j, x)| {
            let nested = h(p, &h(q, x));
            let fused = h(pred_and(p, q), x);
            (nested != fused).then_some((j, nested, fused))
        })
    })?;
    let report = match hit {
        None => CheckReport::pass(law, total),
        Some((i, (j, nested, fused))) => {
            let (p, q) = pairs[i];
            CheckReport::fail(
                law.clone(),
                (i * xs.len() + j) as u64 + 1,
                Witness::new(law)
                    .bind("p", Value::Pred(p))
                    .bind("q", Value::Pred(q))
                    .bind("xs", xs[j].to_value())
                    .bind("nested", nested.to_value())
                    .bind("fused", fused.to_value()),
            )
        }
    };
    Ok(report.charged(total).timed(started.elapsed()))
}

/// Fusion for both `take_while` and `filter_p`.
pub fn check_fusion(u: &Universe, opts: &CheckOptions) -> Result<CheckReport, CheckError> {
    let tw = check_fusion_of("takeWhile", take_while, u, opts)?;
    let fl = check_fusion_of("filter", filter_p, u, &opts.after(tw.evaluations))?;
    Ok(CheckReport::combine("fusion", [tw, fl]))
}

/// `(∀z: z ≤ x ⇔ z ≤ y) ⇒ x = y` for all `x`, `y`.
///
/// Lower sets are tabulated once (`n²` evaluations); pairs with equal lower
/// sets are then found by hashing. Cases count the `n²` pairs.
pub fn check_indirect_equality<O: OrderDef>(
    o: &O,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let law = format!("indirect-equality:{}", o.name());
    let elems = o.elements(u);
    let n = elems.len();
    let total = product(n, n);
    opts.ensure(total)?;
    let down: Vec<Vec<u32>> = opts.map_all(&elems, |x| {
        (0..n)
            .filter(|&j| o.leq(&elems[j], x))
            .map(|j| j as u32)
            .collect()
    })?;

    // the lexicographically first violating (x, y): x is the smallest index
    // sharing its lower set, y the smallest other index in that class
    let mut first_with: HashMap<&[u32], usize> = HashMap::with_capacity(n);
    let mut partner: Vec<Option<usize>> = vec![None; n];
    for (j, d) in down.iter().enumerate() {
        match first_with.get(d.as_slice()) {
            Some(&i) => {
                if partner[i].is_none() {
                    partner[i] = Some(j);
                }
            }
            None => {
                first_with.insert(d.as_slice(), j);
            }
        }
    }
    let report = match partner
        .iter()
        .enumerate()
        .find_map(|(i, p)| p.map(|j| (i, j)))
    {
        None => CheckReport::pass(law, total),
        Some((i, j)) => CheckReport::fail(
            law.clone(),
            (i * n + j) as u64 + 1,
            Witness::new(law)
                .bind("x", elems[i].to_value())
                .bind("y", elems[j].to_value()),
        ),
    };
    Ok(report.charged(total).timed(started.elapsed()))
}

/// Splitting pairs that look like connections but are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonGcPair {
    WordsUnwords,
    LinesUnlines,
}

impl NonGcPair {
    pub const ALL: [NonGcPair; 2] = [NonGcPair::WordsUnwords, NonGcPair::LinesUnlines];

    pub fn as_str(self) -> &'static str {
        match self {
            NonGcPair::WordsUnwords => "words-unwords",
            NonGcPair::LinesUnlines => "lines-unlines",
        }
    }

    /// The pair as a candidate connection with `f` the join (`unwords`,
    /// `unlines`) and `g` the split, prefix-ordered on both sides.
    pub fn connection(self) -> CanonicalGC<Prefix, ListPrefix> {
        match self {
            NonGcPair::WordsUnwords => {
                CanonicalGC::new(self.as_str(), unwords_join, words_split, Prefix, ListPrefix)
            }
            NonGcPair::LinesUnlines => {
                CanonicalGC::new(self.as_str(), unlines_join, lines_split, Prefix, ListPrefix)
            }
        }
    }
}

impl fmt::Display for NonGcPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NonGcPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NonGcPair::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown pair {s:?}"))
    }
}

/// Searches for a law every Galois connection satisfies but `pair` breaks.
///
/// Laws are tried in order: `f ∘ g ∘ f = f`, `g ∘ f ∘ g = g` (these hold
/// for any partial orders, so a violation rules out every connection),
/// then the two cancellations and the connection itself under the prefix
/// orders. The first law with a violation is reported with its minimal
/// witness. `NotFound` means every law held in `u`.
pub fn find_non_gc_counterexample(
    pair: NonGcPair,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    let c = pair.connection();
    let law = format!("non-gc:{pair}");
    let mut spent = 0;
    let mut cases = 0;
    type Stage = fn(
        &CanonicalGC<Prefix, ListPrefix>,
        &Universe,
        &CheckOptions,
    ) -> Result<CheckReport, CheckError>;
    let stages: [Stage; 5] = [
        check_fgf,
        check_gfg,
        |c, u, o| check_cancellation(c, u, Side::Left, o),
        |c, u, o| check_cancellation(c, u, Side::Right, o),
        check_canonical_gc,
    ];
    for stage in stages {
        let r = stage(&c, u, &opts.after(spent))?;
        spent += r.evaluations;
        cases += r.cases_checked;
        if !r.passed() {
            let mut out = CheckReport::fail(
                law,
                cases,
                r.counterexample.unwrap_or_else(|| Witness::new("?")),
            );
            out.evaluations = spent;
            return Ok(out.timed(started.elapsed()));
        }
    }
    Err(CheckError::NotFound {
        target: pair.as_str().to_string(),
        alphabet_size: u.alphabet_size,
        max_len: u.max_len,
    })
}
