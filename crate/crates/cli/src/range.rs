//! Inclusive integer ranges (`a..b`) and the `N=..,K=..,D=..` grid syntax.

use subpack::Parameters;

/// An inclusive range of `u64` values, written `a..b` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeIncl {
    pub lo: u64,
    pub hi: u64,
}

impl RangeIncl {
    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl std::fmt::Display for RangeIncl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parses `a..b` (inclusive on both ends) or a bare integer `a`.
pub fn parse_range(text: &str) -> Result<RangeIncl, String> {
    let malformed = || format!("malformed range '{text}', expected a..b with a <= b");
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.parse::<u64>().map_err(|_| malformed())?,
            hi.parse::<u64>().map_err(|_| malformed())?,
        ),
        None => {
            let single = text.parse::<u64>().map_err(|_| malformed())?;
            (single, single)
        }
    };
    if lo > hi {
        return Err(malformed());
    }
    Ok(RangeIncl { lo, hi })
}

/// Ranges for all three parameters, written `N=a..b,K=a..b,D=a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub n: RangeIncl,
    pub k: RangeIncl,
    pub d: RangeIncl,
}

impl std::fmt::Display for GridSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N={},K={},D={}", self.n, self.k, self.d)
    }
}

/// Parses `N=a..b,K=a..b,D=a..b`; the three segments may appear in any order.
pub fn parse_grid(text: &str) -> Result<GridSpec, String> {
    let mut n = None;
    let mut k = None;
    let mut d = None;
    for segment in text.split(',') {
        let (key, range) = segment
            .split_once('=')
            .ok_or_else(|| format!("malformed grid segment '{segment}', expected X=a..b"))?;
        let slot = match key.trim() {
            "N" => &mut n,
            "K" => &mut k,
            "D" => &mut d,
            other => return Err(format!("unknown grid key '{other}', expected N, K, or D")),
        };
        if slot.is_some() {
            return Err(format!("duplicate grid key '{}'", key.trim()));
        }
        *slot = Some(parse_range(range)?);
    }
    Ok(GridSpec {
        n: n.ok_or("grid is missing N=a..b")?,
        k: k.ok_or("grid is missing K=a..b")?,
        d: d.ok_or("grid is missing D=a..b")?,
    })
}

impl GridSpec {
    /// All valid parameter triples in the grid, in lexicographic `(N, K, D)`
    /// order, together with the number of combinations that failed
    /// validation.
    pub fn valid_triples(&self) -> (Vec<Parameters>, usize) {
        let mut triples = Vec::new();
        let mut skipped = 0;
        for n in self.n.iter() {
            for k in self.k.iter() {
                for d in self.d.iter() {
                    match Parameters::new(n, k, d) {
                        Ok(params) => triples.push(params),
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        (triples, skipped)
    }
}
