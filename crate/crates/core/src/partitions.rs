//! Integer partitions and Littlewood-Richardson coefficients.
//!
//! Partitions index Schubert classes. They are ordered by weight first and
//! then lexicographically by parts; that order fixes basis enumeration and
//! every serialized output.
//!
//! Littlewood-Richardson coefficients are counted by filling the skew shape
//! `nu/lam` in reverse reading order (rows top to bottom, each row right to
//! left) and rejecting any prefix that breaks the lattice condition. Results
//! are memoized in a process-wide cache that can be persisted to disk.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn row(len: usize) -> Self {
        Partition {
            parts: if len == 0 { vec![] } else { vec![len] },
        }
    }

    pub fn column(len: usize) -> Self {
        Partition {
            parts: vec![1; len],
        }
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses the comma-separated form used by the cache file, e.g. `2,1` or the
/// empty string for the zero partition.
impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad part {p:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(format!("zero part in {s:?}"));
        }
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

pub fn conjugate(lam: &Partition) -> Partition {
    let cols = lam.part(0);
    let parts = (0..cols)
        .map(|c| lam.parts.iter().take_while(|&&p| p > c).count())
        .collect();
    Partition { parts }
}

/// All partitions inside a `rows x cols` box, sorted by weight and then
/// lexicographically.
pub fn box_partitions(rows: usize, cols: usize) -> Vec<Partition> {
    fn extend(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            extend(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The complement of `lam` in the `rows x cols` box, rotated by 180 degrees.
pub fn box_complement(lam: &Partition, rows: usize, cols: usize) -> Result<Partition> {
    if !lam.fits_box(rows, cols) {
        return Err(Error::NotInBox {
            partition: lam.to_string(),
            rows,
            cols,
        });
    }
    let parts: Vec<usize> = (0..rows).map(|i| cols - lam.part(rows - 1 - i)).collect();
    Partition::new(parts)
}

/// Whether `outer / inner` is a horizontal strip: `inner` is contained in
/// `outer` and no column of the skew shape holds two boxes.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..outer.len()).all(|i| outer.part(i) <= inner.part(i - 1))
}

type LrKey = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn canonical_key(lam: &Partition, mu: &Partition, nu: &Partition) -> LrKey {
    if lam <= mu {
        (lam.clone(), mu.clone(), nu.clone())
    } else {
        (mu.clone(), lam.clone(), nu.clone())
    }
}

/// The Littlewood-Richardson coefficient `c^nu_{lam,mu}`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lam.weight() + mu.weight() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    if lam.is_empty() || mu.is_empty() {
        return 1;
    }
    let key = canonical_key(lam, mu, nu);
    if let Some(&c) = cache().read().unwrap().get(&key) {
        return c;
    }
    let c = count_lr_tableaux(lam, mu, nu);
    cache().write().unwrap().insert(key, c);
    c
}

/// Counts semistandard fillings of `nu/lam` with content `mu` whose reverse
/// reading word is a lattice word.
fn count_lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    struct Filler<'a> {
        lam: &'a Partition,
        nu: &'a Partition,
        content: &'a [usize],
        cells: Vec<(usize, usize)>,
        grid: Vec<Vec<usize>>,
        used: Vec<usize>,
    }

    impl Filler<'_> {
        fn run(&mut self, pos: usize) -> u64 {
            let Some(&(r, c)) = self.cells.get(pos) else {
                return 1;
            };
            let mut hi = self.content.len();
            if c + 1 < self.nu.part(r) {
                hi = hi.min(self.grid[r][c + 1]);
            }
            let lo = if r > 0 && c >= self.lam.part(r - 1) {
                self.grid[r - 1][c] + 1
            } else {
                1
            };
            let mut total = 0;
            for v in lo..=hi {
                let i = v - 1;
                if self.used[i] == self.content[i] {
                    continue;
                }
                if i > 0 && self.used[i - 1] <= self.used[i] {
                    continue;
                }
                self.used[i] += 1;
                self.grid[r][c] = v;
                total += self.run(pos + 1);
                self.used[i] -= 1;
            }
            self.grid[r][c] = 0;
            total
        }
    }

    let cells = (0..nu.len())
        .flat_map(|r| (lam.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let grid = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut filler = Filler {
        lam,
        nu,
        content: mu.parts(),
        cells,
        grid,
        used: vec![0; mu.len()],
    };
    filler.run(0)
}

/// Number of memoized coefficients currently held.
pub fn lr_cache_len() -> usize {
    cache().read().unwrap().len()
}

pub fn clear_lr_cache() {
    cache().write().unwrap().clear();
}

const CACHE_HEADER: &str = "LRCACHE v1";

fn join_parts(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders the cache in the `LRCACHE v1` text format, entries sorted.
pub fn render_lr_cache() -> String {
    let guard = cache().read().unwrap();
    let mut entries: Vec<(&LrKey, &u64)> = guard.iter().collect();
    entries.sort();
    let mut out = String::from(CACHE_HEADER);
    out.push('\n');
    for ((lam, mu, nu), c) in entries {
        out.push_str(&format!(
            "{}|{}|{}={}\n",
            join_parts(lam),
            join_parts(mu),
            join_parts(nu),
            c
        ));
    }
    out
}

/// Parses `LRCACHE v1` text into entries without touching the cache.
pub fn parse_lr_cache(text: &str) -> Result<Vec<(Partition, Partition, Partition, u64)>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == CACHE_HEADER => {}
        Some((_, h)) => return Err(Error::CacheVersion(h.trim().to_string())),
        None => return Err(Error::CacheVersion(String::new())),
    }
    let mut entries = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| Error::CacheParse {
            line: line_no,
            message,
        };
        let (shapes, value) = line
            .split_once('=')
            .ok_or_else(|| bad("missing '='".into()))?;
        let fields: Vec<&str> = shapes.split('|').collect();
        if fields.len() != 3 {
            return Err(bad(format!("expected 3 partitions, got {}", fields.len())));
        }
        let mut ps = fields.iter().map(|f| f.parse::<Partition>().map_err(&bad));
        let lam = ps.next().unwrap()?;
        let mu = ps.next().unwrap()?;
        let nu = ps.next().unwrap()?;
        let c = value
            .trim()
            .parse::<u64>()
            .map_err(|e| bad(format!("bad coefficient {value:?}: {e}")))?;
        if c > 0
            && (lam.weight() + mu.weight() != nu.weight()
                || !nu.contains(&lam)
                || !nu.contains(&mu))
        {
            return Err(bad(format!("nonzero coefficient for {lam} {mu} {nu}")));
        }
        entries.push((lam, mu, nu, c));
    }
    Ok(entries)
}

/// Merges parsed entries into the cache; returns the number of entries read.
pub fn merge_lr_cache(text: &str) -> Result<usize> {
    let entries = parse_lr_cache(text)?;
    let count = entries.len();
    let mut guard = cache().write().unwrap();
    for (lam, mu, nu, c) in entries {
        guard.insert(canonical_key(&lam, &mu, &nu), c);
    }
    Ok(count)
}

pub fn load_lr_cache(path: impl AsRef<Path>) -> Result<usize> {
    let text = std::fs::read_to_string(path)?;
    merge_lr_cache(&text)
}

/// Writes the cache to `path`; returns the number of entries written.
pub fn save_lr_cache(path: impl AsRef<Path>) -> Result<usize> {
    let text = render_lr_cache();
    std::fs::write(path, &text)?;
    Ok(text.lines().count() - 1)
}
