//! Reference implementations of the sequence combinators under test.
//!
//! `words`/`lines` and their inverses treat element 0 as the separator.

use crate::model::{Elem, PairSeq, Pred, Seq, SeqList};

/// The separator symbol for the splitting combinators.
pub const SEPARATOR: Elem = Elem(0);

/// Longest prefix of `xs` whose elements all satisfy `p`.
pub fn take_while(p: Pred, xs: &Seq) -> Seq {
    xs.iter().copied().take_while(|&x| p.holds(x)).collect()
}

/// Longest prefix of `xs` not exceeding `n` in length.
pub fn take_n(n: usize, xs: &Seq) -> Seq {
    xs.iter().copied().take(n).collect()
}

/// Longest sublist of `xs` whose elements all satisfy `p`.
pub fn filter_p(p: Pred, xs: &Seq) -> Seq {
    xs.iter().copied().filter(|&x| p.holds(x)).collect()
}

/// Longest suffix of `xs` whose head fails `p`.
pub fn drop_while(p: Pred, xs: &Seq) -> Seq {
    xs.iter().copied().skip_while(|&x| p.holds(x)).collect()
}

pub fn head_fails(p: Pred, xs: &Seq) -> bool {
    match xs.head() {
        None => true,
        Some(h) => !p.holds(h),
    }
}

pub fn zip_pair(xs: &Seq, ys: &Seq) -> PairSeq {
    xs.iter().copied().zip(ys.iter().copied()).collect()
}

pub fn unzip_pair(zs: &PairSeq) -> (Seq, Seq) {
    (zs.fst(), zs.snd())
}

/// Splits on maximal runs of the separator, dropping empty words.
pub fn words_split(s: &Seq) -> SeqList {
    SeqList(
        s.as_slice()
            .split(|&e| e == SEPARATOR)
            .filter(|w| !w.is_empty())
            .map(Seq::from)
            .collect(),
    )
}

/// Joins words with exactly one separator between consecutive words.
pub fn unwords_join(ws: &SeqList) -> Seq {
    let mut out = Seq::new();
    for (i, w) in ws.as_slice().iter().enumerate() {
        if i > 0 {
            out.push(SEPARATOR);
        }
        w.iter().for_each(|&e| out.push(e));
    }
    out
}

/// Cuts at every separator; a final separator does not open an empty line.
pub fn lines_split(s: &Seq) -> SeqList {
    let mut lines: Vec<Seq> = s
        .as_slice()
        .split(|&e| e == SEPARATOR)
        .map(Seq::from)
        .collect();
    // `split` always yields a trailing piece after the last separator
    if lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    SeqList(lines)
}

/// Appends a separator after every line.
pub fn unlines_join(ls: &SeqList) -> Seq {
    let mut out = Seq::new();
    for l in ls.as_slice() {
        l.iter().for_each(|&e| out.push(e));
        out.push(SEPARATOR);
    }
    out
}

pub fn reverse(xs: &Seq) -> Seq {
    xs.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ids: &[u8]) -> Seq {
        Seq::from_ids(ids)
    }

    fn list(items: &[&[u8]]) -> SeqList {
        SeqList(items.iter().map(|ids| s(ids)).collect())
    }

    fn even() -> Pred {
        Pred::from_members(&[0, 2, 4, 6])
    }

    fn odd() -> Pred {
        Pred::from_members(&[1, 3, 5, 7])
    }

    #[test]
    fn take_while_examples() {
        assert_eq!(take_while(even(), &Seq::new()), Seq::new());
        assert_eq!(take_while(even(), &s(&[2, 4, 5])), s(&[2, 4]));
        assert_eq!(take_while(Pred::empty(), &s(&[2, 4, 5])), Seq::new());
        assert_eq!(take_while(even(), &s(&[2, 5, 4])), s(&[2]));
    }

    #[test]
    fn take_n_examples() {
        let xs = s(&[2, 4, 5]);
        assert_eq!(take_n(3, &xs), xs);
        assert_eq!(take_n(99, &xs), xs);
        assert_eq!(take_n(0, &xs), Seq::new());
        assert_eq!(take_n(2, &xs), s(&[2, 4]));
    }

    #[test]
    fn filter_examples() {
        let xs = s(&[2, 4, 5]);
        assert_eq!(filter_p(even(), &xs), s(&[2, 4]));
        assert_eq!(filter_p(odd(), &xs), s(&[5]));
        assert_eq!(filter_p(Pred::full(6), &xs), xs);
    }

    #[test]
    fn drop_while_examples() {
        let xs = s(&[2, 4, 5]);
        assert_eq!(drop_while(even(), &xs), s(&[5]));
        assert_eq!(drop_while(even(), &Seq::new()), Seq::new());
        assert_eq!(drop_while(Pred::empty(), &xs), xs);
    }

    #[test]
    fn head_fails_examples() {
        assert!(head_fails(even(), &Seq::new()));
        assert!(!head_fails(even(), &s(&[2, 5])));
        assert!(head_fails(even(), &s(&[5, 2])));
    }

    #[test]
    fn zip_examples() {
        assert_eq!(
            zip_pair(&s(&[1, 2, 3]), &s(&[7, 8])),
            PairSeq::from_ids(&[(1, 7), (2, 8)])
        );
        assert_eq!(zip_pair(&Seq::new(), &s(&[1])), PairSeq::new());
        let zs = PairSeq::from_ids(&[(1, 0), (0, 0), (2, 1)]);
        let (a, b) = unzip_pair(&zs);
        assert_eq!(zip_pair(&a, &b), zs);
    }

    #[test]
    fn unzip_examples() {
        assert_eq!(unzip_pair(&PairSeq::new()), (Seq::new(), Seq::new()));
        assert_eq!(
            unzip_pair(&PairSeq::from_ids(&[(1, 7), (2, 8)])),
            (s(&[1, 2]), s(&[7, 8]))
        );
        let (xs, ys) = (s(&[1, 2, 3]), s(&[7, 8]));
        assert_ne!(unzip_pair(&zip_pair(&xs, &ys)), (xs, ys));
    }

    #[test]
    fn words_examples() {
        assert_eq!(words_split(&Seq::new()), list(&[]));
        assert_eq!(words_split(&s(&[1, 0, 0, 1])), list(&[&[1], &[1]]));
        assert_eq!(words_split(&s(&[1, 0, 0, 0])), list(&[&[1]]));
        assert_eq!(words_split(&s(&[0, 1, 2, 0, 3])), list(&[&[1, 2], &[3]]));
    }

    #[test]
    fn unwords_examples() {
        assert_eq!(unwords_join(&list(&[])), Seq::new());
        assert_eq!(unwords_join(&list(&[&[1], &[1]])), s(&[1, 0, 1]));
        assert_eq!(unwords_join(&list(&[&[1, 0, 0, 0]])), s(&[1, 0, 0, 0]));
    }

    #[test]
    fn lines_examples() {
        assert_eq!(lines_split(&Seq::new()), list(&[]));
        assert_eq!(lines_split(&s(&[1, 0, 1, 0])), list(&[&[1], &[1]]));
        assert_eq!(lines_split(&s(&[1, 0, 0, 1])), list(&[&[1], &[], &[1]]));
        assert_eq!(lines_split(&s(&[1])), list(&[&[1]]));
        assert_eq!(lines_split(&s(&[0])), list(&[&[]]));
        assert_eq!(unlines_join(&list(&[&[1]])), s(&[1, 0]));
        assert_eq!(unlines_join(&list(&[])), Seq::new());
    }

    #[test]
    fn reverse_twice_is_identity() {
        let xs = s(&[0, 1, 1]);
        assert_eq!(reverse(&reverse(&xs)), xs);
        assert_eq!(reverse(&xs), s(&[1, 1, 0]));
    }
}
