//! Exhaustive meta-checks over the built-in connections and specs.

use galois::catalog::{check_connection, check_spec, Connection, GcLaw, Implementation, SpecName};
use galois::combinators::{drop_while, take_while};
use galois::connections::{check_easy_hard, EasyHardSpec};
use galois::model::Pred;
use galois::oracle::{candidates_below, EasyCondition};
use galois::orders::{is_prefix, Prefix, Sublist, Suffix};
use galois::report::Verdict;
use galois::{CheckOptions, Seq, Universe, Value};

fn opts() -> CheckOptions {
    CheckOptions::default()
}

#[test]
fn connections_imply_their_consequences() {
    let u = Universe::new(2, 3).unwrap();
    for conn in Connection::ALL {
        let gc = check_connection(conn, GcLaw::Gc, &u, &opts()).unwrap();
        if !gc.passed() {
            continue;
        }
        for law in [
            GcLaw::CancellationLeft,
            GcLaw::CancellationRight,
            GcLaw::SemiInverse,
            GcLaw::Monotone,
        ] {
            let r = check_connection(conn, law, &u, &opts()).unwrap();
            assert!(
                r.passed(),
                "{} holds but {} fails: {:?}",
                gc.law,
                r.law,
                r.counterexample
            );
        }
    }
}

#[test]
fn builtin_connections_hold() {
    let u = Universe::new(2, 4).unwrap();
    for conn in [
        Connection::Spec(SpecName::TakeWhile),
        Connection::Spec(SpecName::Take),
        Connection::Spec(SpecName::Filter),
        Connection::Spec(SpecName::DropWhile),
        Connection::Spec(SpecName::Zip),
        Connection::Identity,
    ] {
        let r = check_connection(conn, GcLaw::Gc, &u, &opts()).unwrap();
        assert!(r.passed(), "{}: {:?}", r.law, r.counterexample);
    }
    for conn in [Connection::WordsUnwords, Connection::LinesUnlines] {
        let r = check_connection(conn, GcLaw::Gc, &u, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail, "{}", r.law);
    }
}

#[test]
fn injective_lower_adjoints() {
    let u = Universe::new(2, 3).unwrap();
    // inclusions, length-pairing and unzip are all injective
    for spec in SpecName::ALL {
        let r =
            check_connection(Connection::Spec(spec), GcLaw::InjectiveAdjoint, &u, &opts()).unwrap();
        assert!(r.passed(), "{}: {:?}", r.law, r.counterexample);
    }
    // unwords sends both [] and [[]] to []
    let r = check_connection(
        Connection::WordsUnwords,
        GcLaw::InjectiveAdjoint,
        &u,
        &opts(),
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);
}

#[test]
fn oracle_models_its_specs_except_drop_while() {
    let u = Universe::new(2, 4).unwrap();
    for spec in [
        SpecName::TakeWhile,
        SpecName::Take,
        SpecName::Filter,
        SpecName::Zip,
    ] {
        let r = check_spec(spec, Implementation::Oracle, &u, &opts()).unwrap();
        assert!(r.passed(), "{spec}: {:?}", r.counterexample);
    }
    // headFails is not closed under taking suffixes, so the pointwise
    // equivalence breaks whatever the hard part is
    let r = check_spec(SpecName::DropWhile, Implementation::Oracle, &u, &opts()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn drop_while_pointwise_counterexample() {
    let u = Universe::new(2, 5).unwrap();
    let r = check_spec(SpecName::DropWhile, Implementation::Reference, &u, &opts()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let w = r.counterexample.unwrap();
    let p = w.get("p").and_then(Value::as_pred).unwrap();
    let xs = w.get("xs").and_then(Value::as_seq).unwrap().clone();
    let y = w.get("y").and_then(Value::as_seq).unwrap().clone();
    assert_eq!(p, Pred::from_bits(0b1));
    assert_eq!(xs, Seq::from_ids(&[1, 0]));
    assert_eq!(y, Seq::from_ids(&[0]));
    // y is a suffix of dropWhile p xs but its head satisfies p
    let hard = drop_while(p, &xs);
    assert!(galois::orders::is_suffix(&y, &hard));
    assert!(!galois::combinators::head_fails(p, &y));
}

#[test]
fn easy_hard_witness_revalidates() {
    let u = Universe::new(2, 3).unwrap();
    // a wrong hard part: always the empty prefix
    let spec = EasyHardSpec::new(
        "takeWhile(const [])",
        EasyCondition::new("ys ≼ xs ∧ all p ys", |ys: &Seq, xs: &Seq| {
            is_prefix(ys, xs) && galois::model::all_satisfy(Pred::from_bits(0b11), ys)
        }),
        Prefix,
        |_: &Seq| Seq::new(),
        |u: &Universe| u.seqs().collect(),
    );
    let r = check_easy_hard(&spec, &u, &opts()).unwrap();
    let w = r.counterexample.unwrap();
    let x = w.get("x").and_then(Value::as_seq).unwrap();
    let y = w.get("y").and_then(Value::as_seq).unwrap();
    assert_ne!(spec.easy.holds(y, x), is_prefix(y, &spec.hard(x).unwrap()));
    assert_eq!(
        (x.clone(), y.clone()),
        (Seq::from_ids(&[0]), Seq::from_ids(&[0]))
    );
}

#[test]
fn empty_sequence_is_always_a_candidate() {
    let u = Universe::new(2, 4).unwrap();
    for x in u.seqs() {
        assert!(candidates_below(&Prefix, &x, &u).contains(&Seq::new()));
        assert!(candidates_below(&Sublist, &x, &u).contains(&Seq::new()));
        assert!(candidates_below(&Suffix, &x, &u).contains(&Seq::new()));
    }
}

#[test]
fn weakening_the_predicate_never_shortens_take_while() {
    let u = Universe::new(3, 4).unwrap();
    let preds: Vec<Pred> = u.preds().collect();
    for x in u.seqs() {
        for &p in &preds {
            for &q in &preds {
                assert!(is_prefix(&take_while(p, &x), &take_while(p.or(q), &x)));
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_workers() {
    let u = Universe::new(2, 4).unwrap();
    for conn in Connection::ALL {
        for law in GcLaw::ALL {
            let one = check_connection(conn, law, &u, &opts()).unwrap();
            for workers in [2, 4, 8] {
                let many = check_connection(conn, law, &u, &opts().with_workers(workers)).unwrap();
                assert!(
                    one.same_outcome(&many),
                    "{} with {workers} workers",
                    one.law
                );
            }
        }
    }
    for spec in SpecName::ALL {
        let one = check_spec(spec, Implementation::Reference, &u, &opts()).unwrap();
        let many =
            check_spec(spec, Implementation::Reference, &u, &opts().with_workers(4)).unwrap();
        assert!(one.same_outcome(&many), "{spec}");
    }
}
