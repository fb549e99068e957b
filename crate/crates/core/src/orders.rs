//! Inductive orderings on sequences and an exhaustive partial-order law checker.
//!
//! Each relation is written as direct recursion on its inductive clauses;
//! the closed-form characterizations (concatenation for prefix, order
//! preserving selection for sublist) are only used as cross-checks in tests.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::time::Instant;

use crate::check::{product, CheckOptions};
use crate::error::CheckError;
use crate::model::{Bounded, PairSeq, Seq, SeqList, SeqPair, Universe};
use crate::report::{CheckReport, Value, Witness};

/// A type whose inhabitants can be enumerated within a [`Universe`].
pub trait Carrier: Clone + Eq + Hash + Send + Sync + fmt::Debug + 'static {
    fn enumerate(u: &Universe) -> Vec<Self>;
    fn to_value(&self) -> Value;
}

impl Carrier for Seq {
    fn enumerate(u: &Universe) -> Vec<Self> {
        u.seqs().collect()
    }

    fn to_value(&self) -> Value {
        Value::Seq(self.clone())
    }
}

impl Carrier for PairSeq {
    fn enumerate(u: &Universe) -> Vec<Self> {
        u.pair_seqs().collect()
    }

    fn to_value(&self) -> Value {
        Value::Pairs {
            fst: self.fst(),
            snd: self.snd(),
        }
    }
}

impl Carrier for Bounded {
    fn enumerate(u: &Universe) -> Vec<Self> {
        u.bounded().collect()
    }

    fn to_value(&self) -> Value {
        Value::Bounded {
            n: self.n,
            seq: self.seq.clone(),
        }
    }
}

impl Carrier for SeqPair {
    fn enumerate(u: &Universe) -> Vec<Self> {
        u.seq_pairs().collect()
    }

    fn to_value(&self) -> Value {
        Value::SeqPair {
            fst: self.0.clone(),
            snd: self.1.clone(),
        }
    }
}

impl Carrier for SeqList {
    fn enumerate(u: &Universe) -> Vec<Self> {
        u.seq_lists().collect()
    }

    fn to_value(&self) -> Value {
        Value::SeqList(self.0.clone())
    }
}

/// A named, decidable binary relation claimed to be a partial order on its
/// carrier.
pub trait OrderDef: Sync {
    type Elem: Carrier;

    fn name(&self) -> &str;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// The carrier as enumerated in `u`.
    fn elements(&self, u: &Universe) -> Vec<Self::Elem> {
        Self::Elem::enumerate(u)
    }
}

impl<O: OrderDef + ?Sized> OrderDef for &O {
    type Elem = O::Elem;

    fn name(&self) -> &str {
        (**self).name()
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        (**self).leq(a, b)
    }

    fn elements(&self, u: &Universe) -> Vec<Self::Elem> {
        (**self).elements(u)
    }
}

#[inline]
pub(crate) fn prefix_by<T: PartialEq>(mut ys: &[T], mut xs: &[T]) -> bool {
    loop {
        match (ys, xs) {
            ([], _) => return true,
            (_, []) => return false,
            ([y, ys_tail @ ..], [x, xs_tail @ ..]) => {
                if y != x {
                    return false;
                }
                ys = ys_tail;
                xs = xs_tail;
            }
        }
    }
}

fn sublist_by<T: PartialEq>(ys: &[T], xs: &[T]) -> bool {
    match (ys, xs) {
        ([], _) => true,
        (_, []) => false,
        ([y, ys_tail @ ..], [x, xs_tail @ ..]) => {
            sublist_by(ys, xs_tail) || (y == x && sublist_by(ys_tail, xs_tail))
        }
    }
}

fn suffix_by<T: PartialEq>(s: &[T], l: &[T]) -> bool {
    match l {
        [] => s.is_empty(),
        [_, t @ ..] => s == l || suffix_by(s, t),
    }
}

/// `ys ≼ xs`: `ys` is an initial segment of `xs`.
pub fn is_prefix(ys: &Seq, xs: &Seq) -> bool {
    prefix_by(ys.as_slice(), xs.as_slice())
}

/// `ys ⊑ xs`: `ys` is an order preserving selection from `xs`.
pub fn is_sublist(ys: &Seq, xs: &Seq) -> bool {
    sublist_by(ys.as_slice(), xs.as_slice())
}

/// `s` equals `l` or one of its tails.
pub fn is_suffix(s: &Seq, l: &Seq) -> bool {
    suffix_by(s.as_slice(), l.as_slice())
}

/// `≤` on the bound and `≼` on the sequence.
pub fn product_order(a: &Bounded, b: &Bounded) -> bool {
    a.n <= b.n && is_prefix(&a.seq, &b.seq)
}

/// Prefix order on pair sequences, comparing pairs for equality.
pub fn pair_prefix(zs: &PairSeq, ws: &PairSeq) -> bool {
    prefix_by(zs.as_slice(), ws.as_slice())
}

macro_rules! order {
    ($ty:ident, $elem:ty, $name:literal, $leq:expr) => {
        #[derive(Clone, Copy, Debug, Default)]
        pub struct $ty;

        impl OrderDef for $ty {
            type Elem = $elem;

            fn name(&self) -> &str {
                $name
            }

            fn leq(&self, a: &$elem, b: &$elem) -> bool {
                $leq(a, b)
            }
        }
    };
}

order!(Prefix, Seq, "prefix", is_prefix);
order!(Sublist, Seq, "sublist", is_sublist);
order!(Suffix, Seq, "suffix", is_suffix);
order!(Product, Bounded, "product", product_order);
order!(PairPrefix, PairSeq, "pair-prefix", pair_prefix);
order!(
    BothPrefix,
    SeqPair,
    "prefix-x-prefix",
    |a: &SeqPair, b: &SeqPair| is_prefix(&a.0, &b.0) && is_prefix(&a.1, &b.1)
);
order!(
    ListPrefix,
    SeqList,
    "list-prefix",
    |a: &SeqList, b: &SeqList| prefix_by(a.as_slice(), b.as_slice())
);

/// The sub-poset of `inner` on the elements satisfying `keep`.
pub struct Restricted<O, F> {
    inner: O,
    name: String,
    keep: F,
}

impl<O, F> Restricted<O, F>
where
    O: OrderDef,
    F: Fn(&O::Elem) -> bool + Sync,
{
    pub fn new(inner: O, name: impl Into<String>, keep: F) -> Self {
        Restricted {
            inner,
            name: name.into(),
            keep,
        }
    }
}

impl<O, F> OrderDef for Restricted<O, F>
where
    O: OrderDef,
    F: Fn(&O::Elem) -> bool + Sync,
{
    type Elem = O::Elem;

    fn name(&self) -> &str {
        &self.name
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.inner.leq(a, b)
    }

    fn elements(&self, u: &Universe) -> Vec<Self::Elem> {
        let mut all = self.inner.elements(u);
        all.retain(|e| (self.keep)(e));
        all
    }
}

/// An arbitrary relation over a carrier, for exercising the checkers.
pub struct Relation<T, F> {
    name: String,
    leq: F,
    _carrier: std::marker::PhantomData<fn() -> T>,
}

impl<T, F> Relation<T, F>
where
    T: Carrier,
    F: Fn(&T, &T) -> bool + Sync,
{
    pub fn new(name: impl Into<String>, leq: F) -> Self {
        Relation {
            name: name.into(),
            leq,
            _carrier: std::marker::PhantomData,
        }
    }
}

impl<T, F> OrderDef for Relation<T, F>
where
    T: Carrier,
    F: Fn(&T, &T) -> bool + Sync,
{
    type Elem = T;

    fn name(&self) -> &str {
        &self.name
    }

    fn leq(&self, a: &T, b: &T) -> bool {
        (self.leq)(a, b)
    }
}

/// Outcome of [`check_order_laws`]: one report per law plus the least
/// element when there is exactly one.
#[derive(Clone, Debug)]
pub struct OrderLawReport {
    pub order: String,
    pub elements: usize,
    pub reflexive: CheckReport,
    pub antisymmetric: CheckReport,
    pub transitive: CheckReport,
    pub least_element: Option<Value>,
}

impl OrderLawReport {
    pub fn all_pass(&self) -> bool {
        self.reflexive.passed() && self.antisymmetric.passed() && self.transitive.passed()
    }

    /// The three laws folded into one report, reflexivity first.
    pub fn summary(&self) -> CheckReport {
        CheckReport::combine(
            format!("order-laws:{}", self.order),
            [
                self.reflexive.clone(),
                self.antisymmetric.clone(),
                self.transitive.clone(),
            ],
        )
    }
}

/// Exhaustively checks reflexivity, antisymmetry and transitivity of `o`
/// over its carrier in `u`.
///
/// The relation is tabulated once (`n²` evaluations, charged against the
/// budget up front); transitivity then only visits related pairs, charging
/// one evaluation per related triple. Case counts are the logical
/// quantifier sizes `n`, `n²` and `n³`.
pub fn check_order_laws<O: OrderDef>(
    o: &O,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<OrderLawReport, CheckError> {
    let started = Instant::now();
    let elems = o.elements(u);
    let n = elems.len();
    let tabulate = product(n, n);
    opts.ensure(tabulate)?;

    let idx: Vec<usize> = (0..n).collect();
    // up[i] = { j : elems[i] ≤ elems[j] }, ascending
    // tiled so a block of right-hand elements stays in cache across rows
    const ROWS: usize = 64;
    const COLS: usize = 4096;
    let row_blocks: Vec<usize> = (0..n).step_by(ROWS).collect();
    let up: Vec<Vec<u32>> = opts
        .map_all(&row_blocks, |&start| {
            let rows = &elems[start..(start + ROWS).min(n)];
            let mut out: Vec<Vec<u32>> = vec![Vec::new(); rows.len()];
            for col in (0..n).step_by(COLS) {
                let cols = &elems[col..(col + COLS).min(n)];
                for (a, row) in rows.iter().zip(out.iter_mut()) {
                    for (j, b) in cols.iter().enumerate() {
                        if o.leq(a, b) {
                            row.push((col + j) as u32);
                        }
                    }
                }
            }
            out
        })?
        .into_iter()
        .flatten()
        .collect();
    let related = |i: usize, j: usize| up[i].binary_search(&(j as u32)).is_ok();
    let value = |i: usize| elems[i].to_value();
    let n64 = n as u64;

    let reflexive = match (0..n).find(|&i| !related(i, i)) {
        Some(i) => CheckReport::fail(
            "reflexivity",
            i as u64 + 1,
            Witness::new("reflexivity").bind("x", value(i)),
        ),
        None => CheckReport::pass("reflexivity", n64),
    };

    let antisymmetric = match opts.first_violation(&idx, |&i| {
        up[i]
            .iter()
            .map(|&j| j as usize)
            .find(|&j| j != i && related(j, i))
    })? {
        Some((i, j)) => CheckReport::fail(
            "antisymmetry",
            i as u64 * n64 + j as u64 + 1,
            Witness::new("antisymmetry")
                .bind("x", value(i))
                .bind("y", value(j)),
        ),
        None => CheckReport::pass("antisymmetry", n64 * n64),
    };

    let triples: u64 = up
        .iter()
        .flat_map(|ups| ups.iter().map(|&j| up[j as usize].len() as u64))
        .sum();
    opts.after(tabulate).ensure(triples)?;
    let transitive = match opts.first_violation(&idx, |&i| {
        up[i].iter().map(|&j| j as usize).find_map(|j| {
            up[j]
                .iter()
                .map(|&l| l as usize)
                .find(|&l| !related(i, l))
                .map(|l| (j, l))
        })
    })? {
        Some((i, (j, l))) => CheckReport::fail(
            "transitivity",
            (i as u64 * n64 + j as u64) * n64 + l as u64 + 1,
            Witness::new("transitivity")
                .bind("x", value(i))
                .bind("y", value(j))
                .bind("z", value(l)),
        ),
        None => CheckReport::pass("transitivity", n64 * n64 * n64),
    };

    let mut least = (0..n).filter(|&i| up[i].len() == n);
    let least_element = match (least.next(), least.next()) {
        (Some(m), None) => Some(value(m)),
        _ => None,
    };

    let elapsed = started.elapsed();
    Ok(OrderLawReport {
        order: o.name().to_string(),
        elements: n,
        reflexive: reflexive.charged(n64).timed(elapsed),
        antisymmetric: antisymmetric.charged(tabulate - n64),
        transitive: transitive.charged(triples),
        least_element,
    })
}

/// The built-in orders selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderName {
    Prefix,
    Sublist,
    Suffix,
    Product,
    PairPrefix,
}

impl OrderName {
    pub const ALL: [OrderName; 5] = [
        OrderName::Prefix,
        OrderName::Sublist,
        OrderName::Suffix,
        OrderName::Product,
        OrderName::PairPrefix,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OrderName::Prefix => "prefix",
            OrderName::Sublist => "sublist",
            OrderName::Suffix => "suffix",
            OrderName::Product => "product",
            OrderName::PairPrefix => "pair-prefix",
        }
    }

    pub fn check_laws(
        self,
        u: &Universe,
        opts: &CheckOptions,
    ) -> Result<OrderLawReport, CheckError> {
        match self {
            OrderName::Prefix => check_order_laws(&Prefix, u, opts),
            OrderName::Sublist => check_order_laws(&Sublist, u, opts),
            OrderName::Suffix => check_order_laws(&Suffix, u, opts),
            OrderName::Product => check_order_laws(&Product, u, opts),
            OrderName::PairPrefix => check_order_laws(&PairPrefix, u, opts),
        }
    }
}

impl fmt::Display for OrderName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderName::ALL
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| format!("unknown order {s:?}"))
    }
}
