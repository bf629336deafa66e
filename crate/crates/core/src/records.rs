//! Annotated triangulation records kept as JSON lines.
//!
//! Record ids are local to a store; they are not the identifiers of any external database.

use crate::error::{Error, Result};
use crate::motifs::NAMES;
use crate::ratgeom::min_sum_integer_point;
use crate::schlaefli::{visibility_cones, Visibility};
use crate::surface::{secondary_cone, secondary_forms};
use crate::triangulation::Triangulation;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceRecord {
    pub motif: String,
    pub points: Vec<usize>,
    pub exits: [usize; 4],
    pub visibility: String,
    pub walls: Vec<String>,
    pub equations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotifSummary {
    pub counts: BTreeMap<String, usize>,
    pub total: usize,
    pub occurrences: Vec<OccurrenceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationRecord {
    pub id: u64,
    pub facets: Vec<Vec<usize>>,
    pub gkz: Vec<usize>,
    pub b_vector: Vec<usize>,
    pub orbit_size: usize,
    pub canonical_key: u64,
    pub altshuler: String,
    pub interior_point: Vec<i64>,
    pub secondary_facet_count: usize,
    pub motifs: MotifSummary,
}

impl TriangulationRecord {
    /// Runs the whole pipeline on `t`, storing the lex-min GKZ representative of its orbit.
    pub fn new(id: u64, t: &Triangulation) -> Result<Self> {
        let (orbit_size, rep) = t.orbit();
        let (point, _) = min_sum_integer_point(&secondary_forms(&rep), crate::lattice::NPTS)?;
        let interior_point = point
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Lp("interior point exceeds 64 bits")))
            .collect::<Result<Vec<_>>>()?;
        let cones = visibility_cones(&rep);
        let mut counts: BTreeMap<String, usize> = NAMES.iter().map(|n| (n.to_string(), 0)).collect();
        let occurrences: Vec<OccurrenceRecord> = cones
            .iter()
            .map(|v| {
                *counts.get_mut(&v.occurrence.motif).unwrap() += 1;
                OccurrenceRecord {
                    motif: v.occurrence.motif.clone(),
                    points: v.occurrence.points.clone(),
                    exits: v.occurrence.exits,
                    visibility: v.classification.to_string(),
                    walls: v.wall_strings(),
                    equations: v.equation_strings(),
                }
            })
            .collect();
        Ok(TriangulationRecord {
            id,
            facets: rep.facet_lists(),
            gkz: rep.gkz().to_vec(),
            b_vector: rep.b_vector()?,
            orbit_size,
            canonical_key: rep.canonical_key(),
            altshuler: rep.altshuler().to_string(),
            interior_point,
            secondary_facet_count: secondary_cone(&rep).remove_redundant().ineqs.len(),
            motifs: MotifSummary {
                counts,
                total: occurrences.len(),
                occurrences,
            },
        })
    }

    pub fn triangulation(&self) -> Result<Triangulation> {
        Triangulation::validate(&self.facets)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_line(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn count_of(&self, v: Visibility) -> usize {
        let s = v.to_string();
        self.motifs.occurrences.iter().filter(|o| o.visibility == s).count()
    }
}

/// Recomputes every derived field from the facets, keeping the id.
pub fn annotate(r: &TriangulationRecord) -> Result<TriangulationRecord> {
    TriangulationRecord::new(r.id, &r.triangulation()?)
}

/// Parses `{{0,1,2,5},{...}}` or `[[0,1,2,5],[...]]` into facet lists.
pub fn parse_facet_list(s: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| e.to_string());
    }
    let body = t
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or("expected an outer pair of braces")?
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = body;
    loop {
        let r = rest.trim_start();
        let r = r.strip_prefix('{').ok_or("expected '{'")?;
        let end = r.find('}').ok_or("unbalanced braces")?;
        let facet = r[..end]
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad point index {:?}", x.trim())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        out.push(facet);
        rest = r[end + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix(',').ok_or("expected ',' between facets")?;
    }
    Ok(out)
}

/// Facet lists of a file, one triangulation per nonblank line; `#` starts a comment line.
pub fn parse_facet_file(text: &str) -> Result<Vec<(usize, Vec<Vec<usize>>)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let f = parse_facet_list(l).map_err(|msg| Error::ParseLine { line: i + 1, msg })?;
        out.push((i + 1, f));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum Query {
    Id(u64),
    Gkz(Vec<usize>),
    CanonicalKey(u64),
    Altshuler(String),
    /// Inclusive range of the total number of occurrences.
    MotifCount(usize, usize),
}

impl Query {
    pub fn matches(&self, r: &TriangulationRecord) -> bool {
        match self {
            Query::Id(i) => r.id == *i,
            Query::Gkz(g) => &r.gkz == g,
            Query::CanonicalKey(k) => r.canonical_key == *k,
            Query::Altshuler(a) => &r.altshuler == a,
            Query::MotifCount(lo, hi) => (*lo..=*hi).contains(&r.motifs.total),
        }
    }

    /// Parses `kind=value`, e.g. `id=3`, `gkz=1,14,...`, `key=123`, `altshuler=0`, `motifs=51..51`.
    pub fn parse(s: &str) -> Result<Query> {
        let (kind, value) = s.split_once('=').ok_or_else(|| Error::Parse(format!("expected kind=value, got {s:?}")))?;
        let bad = || Error::Parse(format!("bad value for {kind}: {value:?}"));
        let value = value.trim();
        Ok(match kind.trim() {
            "id" => Query::Id(value.parse().map_err(|_| bad())?),
            "gkz" => {
                let g = value
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                if g.len() != crate::lattice::NPTS {
                    return Err(bad());
                }
                Query::Gkz(g)
            }
            "key" | "canonical_key" => Query::CanonicalKey(value.parse().map_err(|_| bad())?),
            "altshuler" => {
                value.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
                Query::Altshuler(value.to_string())
            }
            "motifs" => {
                let (lo, hi) = value.split_once("..").ok_or_else(bad)?;
                Query::MotifCount(lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?)
            }
            other => return Err(Error::Parse(format!("unknown query kind {other:?}"))),
        })
    }
}

/// An append-only JSON-lines file of records.
#[derive(Clone, Debug)]
pub struct Store {
    pub path: PathBuf,
}

impl Store {
    pub fn open(path: impl AsRef<Path>) -> Store {
        Store {
            path: path.as_ref().to_path_buf(),
        }
    }

    /// All complete records; a trailing line without newline is still being written and is skipped.
    pub fn load(&self) -> Result<Vec<TriangulationRecord>> {
        let f = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        let mut reader = BufReader::new(f);
        let mut line = String::new();
        let mut n = 0;
        loop {
            line.clear();
            if reader.read_line(&mut line)? == 0 || !line.ends_with('\n') {
                break;
            }
            n += 1;
            if line.trim().is_empty() {
                continue;
            }
            let r = TriangulationRecord::from_line(line.trim_end())
                .map_err(|e| Error::ParseLine { line: n, msg: e.to_string() })?;
            out.push(r);
        }
        Ok(out)
    }

    pub fn append(&self, records: &[TriangulationRecord]) -> Result<()> {
        let mut buf = String::new();
        for r in records {
            buf.push_str(&r.to_line());
            buf.push('\n');
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(buf.as_bytes())?;
        Ok(())
    }

    pub fn query(&self, q: &Query) -> Result<Vec<TriangulationRecord>> {
        Ok(self.load()?.into_iter().filter(|r| q.matches(r)).collect())
    }

    /// Validates and annotates every triangulation in `text`, appends them with fresh ids,
    /// and returns the new records. Nothing is written if any line fails.
    pub fn ingest_text(&self, text: &str) -> Result<Vec<TriangulationRecord>> {
        let parsed = parse_facet_file(text)?;
        let tris = parsed
            .iter()
            .map(|(line, f)| {
                Triangulation::validate(f).map_err(|e| Error::ParseLine { line: *line, msg: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        let next = self.load()?.iter().map(|r| r.id).max().unwrap_or(0) + 1;
        let records = tris
            .par_iter()
            .enumerate()
            .map(|(i, t)| TriangulationRecord::new(next + i as u64, t))
            .collect::<Result<Vec<_>>>()?;
        self.append(&records)?;
        Ok(records)
    }

    pub fn ingest(&self, path: impl AsRef<Path>) -> Result<Vec<TriangulationRecord>> {
        let text = std::fs::read_to_string(path)?;
        self.ingest_text(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn brace_and_json_facets() {
        assert_eq!(parse_facet_list("{{0,1,2,5},{1, 2,5,6}}").unwrap(), vec![vec![0, 1, 2, 5], vec![1, 2, 5, 6]]);
        assert_eq!(parse_facet_list("[[0,1,2,5]]").unwrap(), vec![vec![0, 1, 2, 5]]);
        assert!(parse_facet_list("{{0,1,2,5},{1,2}").is_err());
        assert!(parse_facet_list("{{0,1,x,5}}").is_err());
        let lists = data::typical().facet_lists();
        let brace = format!(
            "{{{}}}",
            lists.iter().map(|f| format!("{{{}}}", f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join(",")
        );
        assert_eq!(parse_facet_list(&brace).unwrap(), lists);
    }

    #[test]
    fn file_errors_name_the_line() {
        match parse_facet_file("# comment\n\n{{0,1,2,5}\n") {
            Err(Error::ParseLine { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_facet_file("").unwrap().is_empty());
    }

    #[test]
    fn queries_parse() {
        assert!(matches!(Query::parse("id=3").unwrap(), Query::Id(3)));
        assert!(matches!(Query::parse("motifs=51..51").unwrap(), Query::MotifCount(51, 51)));
        assert!(Query::parse("colour=red").is_err());
        assert!(Query::parse("gkz=1,2").is_err());
    }
}
