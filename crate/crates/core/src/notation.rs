//! Text form of integer lists: `2,2,1,1,0`, with `v^r` for a run of `r`
//! copies of `v` (`15^5,6^7,3^7`). Brackets and spaces are ignored.

use crate::error::{Error, Result};

/// Parses a comma-separated list, expanding `v^r` runs. The empty string is
/// the empty list.
pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    let body: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | '[' | ']'))
        .collect();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for item in body.split(',') {
        if item.is_empty() {
            return Err(Error::Parse(format!("empty entry in {text:?}")));
        }
        let (value, count) = match item.split_once('^') {
            Some((v, r)) => (v, parse_count(r, item)?),
            None => (item, 1),
        };
        let value: i64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {value:?} in {item:?}")))?;
        if out.len() + count > crate::MAX_LEN {
            return Err(Error::TooLong(out.len() + count));
        }
        out.extend(std::iter::repeat_n(value, count));
    }
    Ok(out)
}

fn parse_count(r: &str, item: &str) -> Result<usize> {
    match r.parse::<usize>() {
        Ok(0) => Err(Error::Parse(format!("zero repeat count in {item:?}"))),
        Ok(c) => Ok(c),
        Err(_) => Err(Error::Parse(format!("bad repeat count {r:?} in {item:?}"))),
    }
}

/// Writes a list using `v^r` for runs longer than one.
pub fn format_compact(terms: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < terms.len() {
        let run = terms[i..].iter().take_while(|&&t| t == terms[i]).count();
        parts.push(if run > 1 {
            format!("{}^{run}", terms[i])
        } else {
            terms[i].to_string()
        });
        i += run;
    }
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_runs() {
        assert_eq!(parse_list("2,2,1,1,0").unwrap(), vec![2, 2, 1, 1, 0]);
        assert_eq!(parse_list(" (2, 2,1 ,1,0) ").unwrap(), vec![2, 2, 1, 1, 0]);
        assert_eq!(parse_list("[3,1^3,0]").unwrap(), vec![3, 1, 1, 1, 0]);
        let s = parse_list("15^5,6^7,3^7").unwrap();
        assert_eq!(s.len(), 19);
        assert_eq!(&s[4..6], &[15, 6]);
        assert_eq!(parse_list("").unwrap(), Vec::<i64>::new());
        assert_eq!(parse_list("-1").unwrap(), vec![-1]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["3^0", "1,,2", "a", "1^", "1^x", "2^3^4", ","] {
            assert!(matches!(parse_list(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert_eq!(parse_list("0^2000000"), Err(Error::TooLong(2_000_000)));
    }

    #[test]
    fn round_trip() {
        let terms = vec![15, 15, 15, 6, 3, 3, 0];
        let text = format_compact(&terms);
        assert_eq!(text, "15^3,6,3^2,0");
        let back: Vec<usize> = parse_list(&text)
            .unwrap()
            .into_iter()
            .map(|t| t as usize)
            .collect();
        assert_eq!(back, terms);
        assert_eq!(format_compact(&[]), "");
    }
}
