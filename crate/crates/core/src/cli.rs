//! The `trop3` command line.

use crate::delta2::enumerate_3delta2;
use crate::error::Error;
use crate::incidence::{line_on_surface, Certificate, IncidenceResult, Segment};
use crate::lattice::NPTS;
use crate::lines::{normalize_point, Pluecker, Point};
use crate::motifs::{self, counts, motif_by_name, Occurrence, NAMES};
use crate::ratgeom::{format_form, min_sum_integer_point, Q};
use crate::records::{parse_facet_list, Query, Store};
use crate::schlaefli::{is_generic_of, schlaefli_fan_of, visibility_cone, visibility_cones, wall_arrangement_of};
use crate::surface::{dual_subdivision, is_smooth, secondary_cone, secondary_forms, triangulation_of};
use crate::data;
use crate::triangulation::Triangulation;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "trop3", version, about = "Tropical cubic surfaces, their triangulations and the lines on them")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// JSON-lines record store.
    #[arg(long, global = true, env = "TROP3_STORE")]
    pub store: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    Typical,
    Honeycomb,
}

#[derive(Clone, Debug)]
pub struct Heights(pub Vec<Q>);

#[derive(Clone, Debug)]
pub struct Facets(pub Vec<Vec<usize>>);

#[derive(Clone, Debug)]
pub struct PlueckerArg(pub Pluecker);

/// A triangulation given by facets, by name, or induced by heights.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Facet list in brace (`{{0,1,2,5},...}`) or JSON form.
    #[arg(long, value_parser = parse_facets)]
    pub facets: Option<Facets>,
    /// Coefficient vector of 20 integers or fractions a/b.
    #[arg(long, value_parser = parse_heights, allow_hyphen_values = true)]
    pub heights: Option<Heights>,
    #[arg(long, value_enum)]
    pub example: Option<Example>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regular subdivision induced by a coefficient vector.
    Subdivide {
        #[arg(long, value_parser = parse_heights, allow_hyphen_values = true)]
        heights: Heights,
    },
    /// Facets, dimension and an integer interior point of the secondary cone.
    SecondaryCone(Source),
    /// Whether a tropical line lies on a tropical cubic surface.
    LineCheck {
        #[arg(long, value_parser = parse_pluecker, allow_hyphen_values = true)]
        pluecker: PlueckerArg,
        #[arg(long, value_parser = parse_heights, allow_hyphen_values = true)]
        heights: Heights,
    },
    /// Motif occurrences of a triangulation.
    Motifs(Source),
    /// Visibility classification and Schläfli walls of every occurrence.
    Visibility {
        #[command(flatten)]
        source: Source,
        /// Restrict to one occurrence, written `3A:18,19,15,11,2,9:3,2,0,1`.
        #[arg(long)]
        occurrence: Option<String>,
    },
    /// Full-dimensional cells of the Schläfli fan.
    Fan(Source),
    /// Whether a coefficient vector lies on no wall and in no hardly visible locus.
    Generic(Source),
    /// Validate, annotate and store the triangulations of a file.
    Ingest { path: PathBuf },
    /// Records matching `id=N`, `gkz=a,b,...`, `key=N`, `altshuler=N` or `motifs=LO..HI`.
    Query { query: String },
    /// Unimodular triangulations of the plane configuration 3Δ2.
    Delta2Census,
}

fn parse_rational(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let bad = || format!("malformed number {s:?}");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == 0.into() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_list(s: &str, n: usize, what: &str) -> Result<Vec<Q>, String> {
    let v = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} {what}, got {}", v.len()));
    }
    Ok(v)
}

pub fn parse_heights(s: &str) -> Result<Heights, String> {
    parse_list(s, NPTS, "heights").map(Heights)
}

pub fn parse_pluecker(s: &str) -> Result<PlueckerArg, String> {
    let v = parse_list(s, 6, "Plücker coordinates")?;
    Ok(PlueckerArg(std::array::from_fn(|i| v[i].clone())))
}

pub fn parse_facets(s: &str) -> Result<Facets, String> {
    let f = parse_facet_list(s)?;
    if f.len() != 27 || f.iter().any(|t| t.len() != 4) {
        return Err(format!("expected 27 facets of 4 points, got {} facets", f.len()));
    }
    Ok(Facets(f))
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<(Value, String), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok((json, text)) => Outcome {
            code: 0,
            stdout: match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).expect("json output")),
                Format::Text => text,
            },
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

impl Source {
    fn triangulation(&self) -> Result<Triangulation, Failure> {
        if let Some(Facets(f)) = &self.facets {
            return Ok(Triangulation::validate(f)?);
        }
        match (self.example, &self.heights) {
            (Some(Example::Typical), _) => Ok(data::typical()),
            (Some(Example::Honeycomb), _) => Ok(data::honeycomb()),
            (None, Some(Heights(h))) => Ok(triangulation_of(h)?),
            (None, None) => Err(Failure::Usage("give --facets, --heights or --example".into())),
        }
    }
}

fn q(x: &Q) -> String {
    x.to_string()
}

fn brace(facets: &[Vec<usize>]) -> String {
    let inner: Vec<String> = facets
        .iter()
        .map(|f| format!("{{{}}}", f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("{{{}}}", inner.join(","))
}

fn point_json(p: &Point) -> Value {
    json!(normalize_point(p).iter().map(q).collect::<Vec<_>>())
}

fn point_text(p: &Point) -> String {
    format!("({})", normalize_point(p).iter().map(q).collect::<Vec<_>>().join(","))
}

fn segment_name(s: &Segment) -> String {
    match s {
        Segment::Bounded => "bounded".into(),
        Segment::Ray(f) => format!("ray{f}"),
    }
}

fn certificate_text(c: &Certificate) -> String {
    c.pieces
        .iter()
        .map(|p| {
            let hi = p.hi.as_ref().map(q).unwrap_or_else(|| "inf".into());
            let b: Vec<String> = p.block.iter().map(|x| x.to_string()).collect();
            format!("[{},{}]:{{{}}}", q(&p.lo), hi, b.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_occurrence(s: &str) -> Result<Occurrence, Failure> {
    let bad = || Failure::Usage(format!("malformed occurrence {s:?}"));
    let mut parts = s.split(':');
    let (Some(name), Some(pts), Some(ex), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
        return Err(bad());
    };
    let m = motif_by_name(name)?;
    let pts: Vec<usize> = pts.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let ex: Vec<usize> = ex.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
    if pts.len() != m.nv || ex.len() != 4 || ex.iter().any(|&f| f > 3) || pts.iter().any(|&p| p >= NPTS) {
        return Err(bad());
    }
    Ok(m.canonical(&pts, &[ex[0], ex[1], ex[2], ex[3]]))
}

fn occurrence_json(o: &Occurrence) -> Value {
    json!({"motif": o.motif, "points": o.points, "exits": o.exits})
}

fn store(cli: &Cli) -> Result<Store, Failure> {
    cli.store
        .as_ref()
        .map(Store::open)
        .ok_or_else(|| Failure::Usage("no store given; use --store or TROP3_STORE".into()))
}

fn execute(cli: &Cli) -> Out {
    match &cli.command {
        Command::Subdivide { heights } => {
            let cells = dual_subdivision(&heights.0);
            let smooth = is_smooth(&heights.0);
            let text = format!("{}\n", brace(&cells));
            Ok((json!({"facets": cells, "smooth": smooth}), text))
        }
        Command::SecondaryCone(src) => {
            let t = src.triangulation()?;
            let forms = secondary_forms(&t);
            let k = secondary_cone(&t).remove_redundant();
            let info = k.analyze();
            let (point, sum) = min_sum_integer_point(&forms, NPTS)?;
            let facets: Vec<String> = k.ineqs.iter().map(|f| format_form(f)).collect();
            let point_s: Vec<String> = point.iter().map(|x| x.to_string()).collect();
            let text = format!(
                "generated {}\nfacets {}\n{}\ndimension {}\nlineality {}\ninterior point {} (sum {})\n",
                forms.len(),
                facets.len(),
                facets.join("\n"),
                info.dim,
                info.lineality_dim,
                point_s.join(","),
                sum
            );
            Ok((
                json!({
                    "generated": forms.len(),
                    "facets": facets,
                    "dimension": info.dim,
                    "lineality_dimension": info.lineality_dim,
                    "interior_point": point_s,
                    "interior_point_sum": sum.to_string(),
                }),
                text,
            ))
        }
        Command::LineCheck { pluecker, heights } => match line_on_surface(&pluecker.0, &heights.0)? {
            IncidenceResult::Contained { line, certificates } => {
                let mut text = format!(
                    "contained\nq{}{} {}\nq{}{} {}\n",
                    line.ij[0],
                    line.ij[1],
                    point_text(&line.q_ij),
                    line.kl[0],
                    line.kl[1],
                    point_text(&line.q_kl)
                );
                for (s, c) in &certificates {
                    text.push_str(&format!("{} s={} {}\n", segment_name(s), c.pieces.len(), certificate_text(c)));
                }
                let certs: Vec<Value> = certificates
                    .iter()
                    .map(|(s, c)| json!({"segment": segment_name(s), "s": c.pieces.len(), "pieces": c.pieces}))
                    .collect();
                Ok((
                    json!({
                        "contained": true,
                        "type": format!("{}{}|{}{}", line.ij[0], line.ij[1], line.kl[0], line.kl[1]),
                        "vertices": [point_json(&line.q_ij), point_json(&line.q_kl)],
                        "certificates": certs,
                    }),
                    text,
                ))
            }
            IncidenceResult::Witness { segment, point } => {
                let text = format!(
                    "not contained\nwitness on {} at {}\n",
                    segment_name(&segment),
                    point_text(&point)
                );
                Ok((
                    json!({"contained": false, "segment": segment_name(&segment), "witness": point_json(&point)}),
                    text,
                ))
            }
        },
        Command::Motifs(src) => {
            let t = src.triangulation()?;
            let occ = motifs::occurrences(&t);
            let c = counts(&occ);
            let mut text = format!(
                "{}\ntotal {}\n",
                NAMES.iter().zip(c).map(|(n, k)| format!("{n} {k}")).collect::<Vec<_>>().join("\n"),
                occ.len()
            );
            for o in &occ {
                text.push_str(&format!("{o}\n"));
            }
            let counts: serde_json::Map<String, Value> = NAMES.iter().zip(c).map(|(n, k)| (n.to_string(), json!(k))).collect();
            Ok((
                json!({"counts": counts, "total": occ.len(), "occurrences": occ.iter().map(occurrence_json).collect::<Vec<_>>()}),
                text,
            ))
        }
        Command::Visibility { source, occurrence } => {
            let t = source.triangulation()?;
            let cones = match occurrence {
                Some(s) => vec![visibility_cone(&t, &parse_occurrence(s)?)?],
                None => visibility_cones(&t),
            };
            let mut text = String::new();
            let mut items = Vec::new();
            for v in &cones {
                text.push_str(&format!("{} {}", v.occurrence, v.classification));
                for w in v.wall_strings() {
                    text.push_str(&format!(" wall {w}"));
                }
                for e in v.equation_strings() {
                    text.push_str(&format!(" eq {e}"));
                }
                text.push('\n');
                items.push(json!({
                    "occurrence": occurrence_json(&v.occurrence),
                    "classification": v.classification,
                    "walls": v.wall_strings(),
                    "equations": v.equation_strings(),
                }));
            }
            Ok((json!(items), text))
        }
        Command::Fan(src) => {
            let t = src.triangulation()?;
            let cones = visibility_cones(&t);
            let walls = wall_arrangement_of(&cones);
            let cells = schlaefli_fan_of(&t, &cones);
            let wall_s: Vec<String> = walls.iter().map(|w| format_form(w)).collect();
            let mut text = String::new();
            for (i, w) in wall_s.iter().enumerate() {
                text.push_str(&format!("H{i} {w}\n"));
            }
            text.push_str(&format!("cells {}\n", cells.len()));
            let mut items = Vec::new();
            for c in &cells {
                let sign: String = c.signs.iter().map(|&s| if s { '+' } else { '-' }).collect();
                let pt: Vec<String> = c.point.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("{sign} visible {} at {}\n", c.visible.len(), pt.join(",")));
                items.push(json!({"signs": sign, "point": pt, "visible": c.visible}));
            }
            Ok((json!({"walls": wall_s, "cells": items}), text))
        }
        Command::Generic(src) => {
            let Some(Heights(h)) = &src.heights else {
                return Err(Failure::Usage("generic needs --heights".into()));
            };
            let t = src.triangulation()?;
            let cones = visibility_cones(&t);
            let walls = wall_arrangement_of(&cones);
            let g = is_generic_of(&t, &cones, h)?;
            let hardly: Vec<String> = g.hardly.iter().map(|&i| cones[i].occurrence.to_string()).collect();
            let wall_s: Vec<String> = g.walls.iter().map(|&i| format_form(&walls[i])).collect();
            let mut text = String::from(if g.generic { "generic\n" } else { "not generic\n" });
            for w in &wall_s {
                text.push_str(&format!("on wall {w}\n"));
            }
            for o in &hardly {
                text.push_str(&format!("hardly visible {o}\n"));
            }
            Ok((json!({"generic": g.generic, "walls": wall_s, "hardly": hardly}), text))
        }
        Command::Ingest { path } => {
            let s = store(cli)?;
            let recs = s.ingest(path)?;
            let mut text = String::new();
            for r in &recs {
                text.push_str(&format!("{} gkz {:?} altshuler {} motifs {}\n", r.id, r.gkz, r.altshuler, r.motifs.total));
            }
            Ok((json!(recs), text))
        }
        Command::Query { query } => {
            let s = store(cli)?;
            let q = Query::parse(query).map_err(|e| Failure::Usage(e.to_string()))?;
            let recs = s.query(&q)?;
            let text: String = recs.iter().map(|r| format!("{}\n", r.to_line())).collect();
            Ok((json!(recs), text))
        }
        Command::Delta2Census => {
            let c = enumerate_3delta2();
            let regular = c.triangulations.iter().filter(|t| t.regular).count();
            let all = regular == c.triangulations.len();
            let text = format!(
                "{} triangulations, {} orbits, {}\n",
                c.triangulations.len(),
                c.orbits,
                if all { "all regular".to_string() } else { format!("{regular} regular") }
            );
            Ok((
                json!({"triangulations": c.triangulations.len(), "orbits": c.orbits, "regular": regular}),
                text,
            ))
        }
    }
}
