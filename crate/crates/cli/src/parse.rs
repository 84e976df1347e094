use anyhow::{anyhow, bail, Context, Result};
use mv_core::rootdata::parse_coweight;
use mv_core::{Coweight, RootDatum, Series};

pub fn datum(series: &str, rank: usize) -> Result<RootDatum> {
    let s: Series = series.parse()?;
    Ok(RootDatum::new(s, rank)?)
}

pub fn ints(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|t| t.trim().parse::<i64>().with_context(|| format!("bad integer {t:?}"))).collect()
}

/// Comma separated simple-root indices, each in `lo..=rank`.
pub fn word(s: &str, rank: usize, lo: usize) -> Result<Vec<usize>> {
    let w = ints(s)?;
    w.iter()
        .map(|&i| {
            if i < lo as i64 || i > rank as i64 {
                bail!("index {i} out of range {lo}..={rank}");
            }
            Ok(i as usize)
        })
        .collect()
}

/// A coweight in simple-coroot coordinates, checked against the datum.
pub fn coweight(d: &RootDatum, s: &str) -> Result<Coweight> {
    let c = parse_coweight(s).map_err(|e| anyhow!(e))?;
    if c.rank() != d.rank {
        bail!("{} has rank {}, got {} coordinates", d.name(), d.rank, c.rank());
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_ints() {
        assert_eq!(ints("1, -2,3").unwrap(), vec![1, -2, 3]);
        assert_eq!(word("2,1,3", 3, 1).unwrap(), vec![2, 1, 3]);
        assert!(word("0,1", 2, 1).is_err());
        assert!(word("0,1", 2, 0).is_ok());
        assert!(ints("1,x").is_err());
    }

    #[test]
    fn coweights() {
        let d = datum("a", 2).unwrap();
        assert_eq!(coweight(&d, "1,1").unwrap(), Coweight::from_ints(&[1, 1]));
        assert!(coweight(&d, "1").is_err());
        assert!(datum("E", 6).is_err());
    }
}
