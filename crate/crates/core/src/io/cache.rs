//! Plain-text result cache.
//!
//! One record per line, `M;D1,D2,...,Dn;NUM/DEN`, exponents non-increasing
//! and the value in lowest terms. Lines starting with `#` are comments and
//! blank lines are ignored.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::symbol::IntersectionSymbol;
use crate::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub m: usize,
    pub exponents: Vec<usize>,
    pub value: BigRational,
}

impl CacheRecord {
    pub fn new(symbol: &IntersectionSymbol, value: BigRational) -> Self {
        CacheRecord {
            m: symbol.m(),
            exponents: symbol.exponents().to_vec(),
            value,
        }
    }

    pub fn symbol(&self) -> Result<IntersectionSymbol> {
        IntersectionSymbol::new(&self.exponents, self.m)
    }

    pub fn to_line(&self) -> String {
        let d: Vec<String> = self.exponents.iter().map(usize::to_string).collect();
        format!(
            "{};{};{}/{}",
            self.m,
            d.join(","),
            self.value.numer(),
            self.value.denom()
        )
    }

    /// Parses and validates one record line; `line_no` is used in errors.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self> {
        let bad = |message: String| Error::Cache {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.trim_end_matches(['\r', '\n']).split(';').collect();
        let [m, d, v] = fields.as_slice() else {
            return Err(bad(format!(
                "expected 3 ';'-separated fields, found {}",
                fields.len()
            )));
        };
        let m: usize = m.parse().map_err(|_| bad(format!("bad level {m:?}")))?;
        let exponents = d
            .split(',')
            .map(|x| {
                x.parse::<usize>()
                    .map_err(|_| bad(format!("bad exponent {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let (num, den) = v
            .split_once('/')
            .ok_or_else(|| bad(format!("value {v:?} is not NUM/DEN")))?;
        let num = BigInt::from_str(num).map_err(|_| bad(format!("bad numerator {num:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| bad(format!("bad denominator {den:?}")))?;
        if !den.is_positive() {
            return Err(bad("denominator must be positive".into()));
        }
        if !num.gcd(&den).is_one() {
            return Err(bad(format!("value {v} is not in lowest terms")));
        }
        if exponents.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("exponents are not sorted non-increasing".into()));
        }
        let record = CacheRecord {
            m,
            exponents,
            value: BigRational::new_raw(num, den),
        };
        record
            .symbol()
            .map_err(|e| bad(format!("rejected record: {e}")))?;
        Ok(record)
    }
}

pub fn write_records<W: Write>(mut w: W, records: &[CacheRecord]) -> Result<()> {
    writeln!(w, "# m;exponents;value")?;
    for r in records {
        writeln!(w, "{}", r.to_line())?;
    }
    Ok(())
}

pub fn read_records<R: BufRead>(r: R) -> Result<Vec<CacheRecord>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(CacheRecord::parse_line(trimmed, i + 1)?);
    }
    Ok(out)
}

pub fn cache_save(path: &Path, records: &[CacheRecord]) -> Result<()> {
    let mut buf = Vec::new();
    write_records(&mut buf, records)?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<Vec<CacheRecord>> {
    read_records(BufReader::new(fs::File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn record_lines() {
        let sym = IntersectionSymbol::new(&[4, 0, 0, 0], 2).unwrap();
        assert_eq!(CacheRecord::new(&sym, q(0, 1)).to_line(), "2;4,0,0,0;0/1");
        let r = CacheRecord::parse_line("3;5,0,0,0,0;-1/2", 1).unwrap();
        assert_eq!(r.value, q(-1, 2));
        assert_eq!(r.exponents, vec![5, 0, 0, 0, 0]);
    }

    #[test]
    fn rejects_bad_lines() {
        let cases = [
            "2;4,0,0;1/1",
            "2;0,4,0,0;0/1",
            "2;2,1;1/1",
            "2;4,0,0,0;2/4",
            "2;4,0,0,0;1/-2",
            "2;4,0,0,0;1/0",
            "2;4,0,0,0;5",
            "2;4,0,0,0",
            "x;4,0,0,0;0/1",
            "2;4,a,0,0;0/1",
        ];
        for line in cases {
            assert!(
                matches!(
                    CacheRecord::parse_line(line, 7),
                    Err(Error::Cache { line: 7, .. })
                ),
                "{line:?} accepted"
            );
        }
    }

    #[test]
    fn reports_first_bad_line_number() {
        let text = "# header\n0;1;1/24\n\n2;4,0,0;1/1\n2;bad\n";
        match read_records(text.as_bytes()) {
            Err(Error::Cache { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.txt");
        let records = vec![
            CacheRecord::parse_line("0;1;1/24", 1).unwrap(),
            CacheRecord::parse_line("4;6,0,0,0,0,0;-5/1", 2).unwrap(),
        ];
        cache_save(&path, &records).unwrap();
        assert_eq!(cache_load(&path).unwrap(), records);
        assert!(matches!(
            cache_load(&dir.path().join("missing")),
            Err(Error::Io(_))
        ));
    }
}
