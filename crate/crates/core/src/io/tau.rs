//! τ-notation: `WORD := TERM (SEP TERM)*`, `TERM := "t" UINT ("^" UINT)?`,
//! `SEP := whitespace | "*"`.

use crate::error::{Error, Result};
use crate::symbol::TauWord;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_whitespace(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an unsigned integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<u32>()
            .map(|v| v as usize)
            .map_err(|_| err(start, format!("integer {text} is out of range")))
    }
}

pub fn parse_tau_word(text: &str) -> Result<TauWord> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    cur.skip_whitespace();
    if cur.peek().is_none() {
        return Err(err(cur.pos, "empty input"));
    }
    let mut pairs = Vec::new();
    loop {
        if cur.peek() != Some(b't') {
            return Err(err(cur.pos, "expected 't'"));
        }
        cur.pos += 1;
        let index = cur.uint()?;
        let mut mult = 1;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            let at = cur.pos;
            mult = cur.uint()?;
            if mult == 0 {
                return Err(err(at, "multiplicity must be positive"));
            }
        }
        pairs.push((index, mult));

        let had_space = cur.skip_whitespace();
        let mut had_star = false;
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
            had_star = true;
            cur.skip_whitespace();
        }
        match cur.peek() {
            None if had_star => return Err(err(cur.pos, "expected a term after '*'")),
            None => break,
            Some(_) if !(had_space || had_star) => {
                return Err(err(cur.pos, "expected whitespace or '*' between terms"))
            }
            Some(_) => {}
        }
    }
    TauWord::from_pairs(pairs)
}

/// `t0^3 t4` style, indices ascending, exponent 1 omitted.
pub fn format_tau_word(word: &TauWord) -> String {
    word.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(pairs: &[(usize, usize)]) -> TauWord {
        TauWord::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_tau_word("t0^3 t4").unwrap(), word(&[(0, 3), (4, 1)]));
        assert_eq!(parse_tau_word("t1*t1").unwrap(), word(&[(1, 2)]));
        assert_eq!(
            parse_tau_word("  t2 * t0^2\t").unwrap(),
            word(&[(0, 2), (2, 1)])
        );
    }

    #[test]
    fn rejects_with_offsets() {
        let cases = [
            ("t-1", 1),
            ("", 0),
            ("   ", 3),
            ("x1", 0),
            ("t1t2", 2),
            ("t1^", 3),
            ("t1^0", 3),
            ("t1 *", 4),
            ("t99999999999", 1),
            ("t1 ** t2", 4),
        ];
        for (text, offset) in cases {
            match parse_tau_word(text) {
                Err(Error::Parse { offset: got, .. }) => assert_eq!(got, offset, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_tau_word(&word(&[(4, 1), (0, 3)])), "t0^3 t4");
        assert_eq!(format_tau_word(&word(&[(1, 6)])), "t1^6");
    }
}
