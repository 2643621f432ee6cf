//! graph6 text encoding (headerless), compatible with nauty's `showg`/`geng`.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    // Every byte is in 63..=126, so this is ASCII.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty string"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("byte {} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::OrderOutOfRange(usize::MAX, MAX_ORDER));
        }
        if bytes.len() < 4 {
            return Err(malformed("truncated extended header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n, MAX_ORDER));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(malformed(format!("truncated payload: {} of {need} bytes", body.len())));
    }
    if body.len() > need {
        return Err(malformed(format!("{} trailing bytes after payload", body.len() - need)));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..need * 6).any(bit) {
        return Err(malformed("non-zero padding bits"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(&rows))
}

/// Parses one graph per non-empty line. An optional `>>graph6<<` prefix on
/// the first graph is accepted and ignored.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim().strip_prefix(">>graph6<<").unwrap_or(l.trim());
            from_graph6(l).map_err(|e| match e {
                Error::Graph6(m) => Error::Graph6(format!("line {}: {m}", i + 1)),
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        // Reference string from nauty for the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(from_graph6(&to_graph6(&k23)).unwrap(), k23);
    }

    #[test]
    fn extended_header_for_large_orders() {
        let g = Graph::path(63).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(from_graph6(&s).unwrap(), g);
        let g = Graph::complete(64).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C~~"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C~ "), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("~~"), Err(Error::OrderOutOfRange(..))));
        assert!(matches!(from_graph6("~??"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("?"), Err(Error::OrderOutOfRange(0, _))));
        // K3 needs 3 bits; "B~" sets the padding bits too.
        assert!(matches!(from_graph6("B~"), Err(Error::Graph6(_))));
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn multi_line() {
        let gs = read_graph6_lines("C~\n\n>>graph6<<@\n").unwrap();
        assert_eq!(gs.len(), 2);
        let err = read_graph6_lines("C~\nC\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=64).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..200)
                .prop_map(move |es| Graph::new(n, es.into_iter().filter(|(a, b)| a != b)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = to_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }
}
