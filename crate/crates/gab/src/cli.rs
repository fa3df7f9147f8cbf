//! `gab` command line. Exit status: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gabidulin_core::deephole::{self, Family};
use gabidulin_core::{quadric, Elem, FieldCtx, GabidulinCode, LinPoly, Metric, Word};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::parallel::{Caps, Runner};
use crate::parse::{format_elems, parse_poly, parse_word};
use crate::report::{self, params_text, VerdictWriter};
use crate::selftest;
use crate::specfile::CodeSpec;

#[derive(Debug, Parser)]
#[command(
    name = "gab",
    version,
    about = "Gabidulin code lab: distances, deep holes, covering radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MetricArg {
    Rank,
    Hamming,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Rank => Metric::Rank,
            MetricArg::Hamming => Metric::Hamming,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    FrobeniusShift,
    #[value(name = "k_eq_n_minus_2")]
    KEqNMinus2,
    K1OddM,
    BinaryQuartic,
}

#[derive(Debug, Args)]
struct SpecArg {
    /// code-spec file
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Debug, Args)]
struct WorkArgs {
    #[arg(long, value_enum, default_value = "rank")]
    metric: MetricArg,
    /// override every enumeration cap
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

impl WorkArgs {
    fn runner(&self) -> Result<Runner> {
        Runner::new(self.jobs, self.cap.map_or_else(Caps::default, Caps::uniform))
    }
}

#[derive(Debug, Args)]
struct OutArg {
    /// write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe the field of a spec file
    Field(SpecArg),
    /// Evaluate a message polynomial (coefficients a_0, a_1, …) at the code points
    Encode {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        poly: String,
    },
    /// Brute-force distance from a word to the code
    Dist {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        work: WorkArgs,
    },
    /// Distance through the root-space search, with bound and witness
    Search {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        work: WorkArgs,
    },
    /// Deep-hole status of a word, or of σ_f for --poly
    Classify {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        word: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        #[command(flatten)]
        work: WorkArgs,
    },
    /// Exhaustive minimum distance
    Mindist {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        work: WorkArgs,
    },
    /// Covering radius from a scan of all translation classes
    Radius {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        work: WorkArgs,
        /// also print the distance histogram (classes per distance)
        #[arg(long)]
        histogram: bool,
    },
    /// CSV of every translation class with its distance and witness
    Census {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        work: WorkArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check a deep-hole family; parameters left out are swept over the field
    Family {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, value_enum)]
        kind: FamilyArg,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        /// low-degree part for frobenius_shift and k_eq_n_minus_2
        #[arg(long)]
        poly: Option<String>,
        #[command(flatten)]
        work: WorkArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Count pairs with x1² + x1·x2 + x2² = b over GF(2^m)
    Quadric {
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
        m: Option<u32>,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        b: Option<u64>,
        /// list the pairs themselves (needs --b)
        #[arg(long, requires = "b")]
        list: bool,
        /// nonzero b with no solution pair among the code points (needs --spec)
        #[arg(long, conflicts_with_all = ["m", "b", "list"])]
        gap: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run the acceptance criteria at their built-in parameters
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// run only these criteria
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=selftest::CRITERIA as i64))]
        only: Vec<u8>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load(spec: &SpecArg) -> Result<(CodeSpec, FieldCtx)> {
    let cs = CodeSpec::read(&spec.spec)?;
    let ctx = cs.field()?;
    Ok((cs, ctx))
}

fn sink<'a>(out: &'a mut dyn Write, path: &Option<PathBuf>) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(out),
    })
}

fn elem_arg(ctx: &FieldCtx, v: u64) -> Result<Elem> {
    Ok(ctx.elem(v)?)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Field(spec) => {
            let (_, ctx) = load(&spec)?;
            let modulus: Vec<String> = ctx.modulus().iter().map(|d| d.to_string()).collect();
            writeln!(
                out,
                "p={} s={} m={} q={} order={}",
                ctx.p(),
                ctx.s(),
                ctx.m(),
                ctx.q(),
                ctx.order()
            )?;
            writeln!(out, "modulus={}", modulus.join(","))?;
            writeln!(out, "primitive={}", ctx.primitive())?;
            writeln!(out, "subfield={}", format_elems(&ctx.enumerate_subfield()))?;
        }
        Command::Encode { spec, poly } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let msg = parse_poly(&ctx, &poly)?;
            writeln!(out, "{}", format_elems(code.encode(&msg)?.entries()))?;
        }
        Command::Dist { spec, word, work } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let w = parse_word(&ctx, &word)?;
            let (d, msg) = work.runner()?.oracle_distance(&code, &w, work.metric.into())?;
            writeln!(
                out,
                "distance={d} nearest={} message={}",
                format_elems(code.evaluate(&msg).entries()),
                format_elems(msg.coeffs())
            )?;
        }
        Command::Search { spec, word, work } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let w = parse_word(&ctx, &word)?;
            let caps = work.runner()?.caps;
            let r = deephole::distance_by_search(&code, &w, work.metric.into(), caps.subspace)?;
            let witness = r.witness.map(|w| w.to_string()).unwrap_or_else(|| "none".into());
            writeln!(
                out,
                "distance={} bound={} deep_hole={} witness={witness}",
                r.distance, r.bound, r.is_deep_hole
            )?;
        }
        Command::Classify { spec, word, poly, work } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let w = match (word, poly) {
                (Some(w), _) => parse_word(&ctx, &w)?,
                (None, Some(p)) => sigma_word(&code, &parse_poly(&ctx, &p)?)?,
                (None, None) => unreachable!("clap requires one of --word, --poly"),
            };
            let caps = work.runner()?.caps;
            let r = deephole::classify(&code, &w, work.metric.into(), caps.subspace)?;
            writeln!(out, "distance={} deep_hole={}", r.distance, r.is_deep_hole)?;
        }
        Command::Mindist { spec, work } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            writeln!(out, "{}", work.runner()?.min_distance(&code, work.metric.into())?)?;
        }
        Command::Radius { spec, work, histogram } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let report = work.runner()?.scan(&code, work.metric.into())?;
            writeln!(out, "{}", report.radius)?;
            if histogram {
                for (d, n) in &report.histogram {
                    writeln!(out, "distance={d} classes={n}")?;
                }
            }
        }
        Command::Census { spec, work, out: dest } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let records = work.runner()?.census(&code, work.metric.into())?;
            report::write_census(sink(out, &dest.out)?, &records)?;
        }
        Command::Family {
            spec,
            kind,
            a,
            b,
            c,
            poly,
            work,
            out: dest,
        } => {
            let (cs, ctx) = load(&spec)?;
            let code = cs.code(&ctx)?;
            let low = poly
                .as_deref()
                .map(|p| parse_poly(&ctx, p))
                .transpose()?
                .unwrap_or_else(LinPoly::zero);
            let instances = family_instances(&ctx, kind, a, b, c, low)?;
            let runner = work.runner()?;
            let metric: Metric = work.metric.into();
            let cap = runner.caps.subspace;
            let verdicts = runner.install(|| {
                instances
                    .par_iter()
                    .map(|(_, fam)| deephole::family_check(&code, fam, metric, cap))
                    .collect::<gabidulin_core::Result<Vec<_>>>()
            })?;
            let mut wtr = VerdictWriter::new(sink(out, &dest.out)?)?;
            for ((params, _), v) in instances.iter().zip(&verdicts) {
                wtr.write(params, v)?;
            }
            wtr.finish()?;
        }
        Command::Quadric {
            m,
            spec,
            b,
            list,
            gap,
            out: dest,
        } => {
            if gap {
                let spec = CodeSpec::read(spec.as_deref().expect("clap requires --spec"))?;
                let ctx = spec.field()?;
                quadric::require_binary(&ctx)?;
                let code = spec.code(&ctx)?;
                let mut wtr = csv::Writer::from_writer(sink(out, &dest.out)?);
                wtr.write_record(["b"])?;
                for b in deephole::hamming_quartic_gap(&code) {
                    wtr.write_record([b.to_string()])?;
                }
                wtr.flush()?;
                return Ok(0);
            }
            let ctx = match (m, spec) {
                (Some(m), _) => FieldCtx::new(2, 1, m, None)?,
                (None, Some(path)) => CodeSpec::read(&path)?.field()?,
                (None, None) => unreachable!("clap requires one of --m, --spec"),
            };
            let bs: Vec<Elem> = match b {
                Some(b) => vec![elem_arg(&ctx, b)?],
                None => ctx.elements().collect(),
            };
            let mut wtr = csv::Writer::from_writer(sink(out, &dest.out)?);
            if list {
                let census = quadric::quadric_census(&ctx, bs[0], true)?;
                wtr.write_record(["c1", "c2"])?;
                for (c1, c2) in census.solutions.unwrap_or_default() {
                    wtr.write_record([c1.to_string(), c2.to_string()])?;
                }
            } else {
                wtr.write_record(["b", "count", "closed_form"])?;
                for b in bs {
                    let census = quadric::quadric_census(&ctx, b, false)?;
                    let closed = quadric::closed_form_count(ctx.m(), b.is_zero());
                    wtr.write_record([b.to_string(), census.count.to_string(), closed.to_string()])?;
                }
            }
            wtr.flush()?;
        }
        Command::Selftest { seed, jobs, only } => {
            let cfg = selftest::Config { seed, jobs };
            let ids: Vec<u8> = if only.is_empty() {
                (1..=selftest::CRITERIA).collect()
            } else {
                only
            };
            let mut passed = 0;
            for &id in &ids {
                let c = selftest::run(id, &cfg);
                writeln!(out, "{c}")?;
                out.flush()?;
                passed += c.passed as usize;
            }
            writeln!(out, "{passed}/{} criteria passed (seed {seed})", ids.len())?;
            return Ok(if passed == ids.len() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn sigma_word(code: &GabidulinCode<'_>, f: &LinPoly) -> Result<Word> {
    if !f.deg_q().is_below(code.n()) {
        return Err(Error::Parse(format!(
            "--poly must have q-degree below n = {}",
            code.n()
        )));
    }
    Ok(code.evaluate(f))
}

fn sweep(ctx: &FieldCtx, fixed: Option<u64>) -> Result<Vec<Elem>> {
    match fixed {
        Some(v) => Ok(vec![elem_arg(ctx, v)?]),
        None => Ok(ctx.elements().collect()),
    }
}

fn family_instances(
    ctx: &FieldCtx,
    kind: FamilyArg,
    a: Option<u64>,
    b: Option<u64>,
    c: Option<u64>,
    low: LinPoly,
) -> Result<Vec<(String, Family)>> {
    let low_text = format_elems(low.coeffs());
    Ok(match kind {
        FamilyArg::FrobeniusShift => {
            vec![(params_text(&[("low", low_text)]), Family::FrobeniusShift { low })]
        }
        // a sweep runs over nonzero a only
        FamilyArg::KEqNMinus2 => sweep(ctx, a)?
            .into_iter()
            .filter(|x| a.is_some() || !x.is_zero())
            .map(|a| {
                (
                    params_text(&[("a", a.to_string()), ("low", low_text.clone())]),
                    Family::KEqNMinus2 { a, low: low.clone() },
                )
            })
            .collect(),
        FamilyArg::K1OddM => sweep(ctx, c)?
            .into_iter()
            .map(|c| (params_text(&[("c", c.to_string())]), Family::K1OddM { c }))
            .collect(),
        FamilyArg::BinaryQuartic => {
            let cs = sweep(ctx, c)?;
            sweep(ctx, b)?
                .into_iter()
                .flat_map(|b| cs.iter().map(move |&c| (b, c)))
                .map(|(b, c)| {
                    (
                        params_text(&[("b", b.to_string()), ("c", c.to_string())]),
                        Family::BinaryQuartic { b, c },
                    )
                })
                .collect()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Read;

    const GF16: &str = "p=2\nm=4\nmodulus=1,1,0,0,1\nn=4\nk=2\ng=1,2,4,8\n";

    fn spec_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    fn gab(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("gab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_outputs() {
        let spec = spec_file(GF16);
        let path = spec.path().to_str().unwrap();
        assert_eq!(
            gab(&["mindist", "--spec", path, "--metric", "rank"]),
            (0, "3\n".into(), String::new())
        );
        assert_eq!(
            gab(&["radius", "--spec", path, "--metric", "rank"]),
            (0, "2\n".into(), String::new())
        );
        assert_eq!(
            gab(&["classify", "--spec", path, "--word", "0,0,0,0", "--metric", "rank"]),
            (0, "distance=0 deep_hole=false\n".into(), String::new())
        );
        assert_eq!(gab(&["mindist", "--spec", path, "--metric", "hamming"]).1, "3\n");
    }

    #[test]
    fn encode_dist_and_search_are_consistent() {
        let spec = spec_file(GF16);
        let path = spec.path().to_str().unwrap();
        let (code, word, _) = gab(&["encode", "--spec", path, "--poly", "5,11"]);
        assert_eq!(code, 0);
        let word = word.trim();
        assert_eq!(
            gab(&["dist", "--spec", path, "--word", word]).1,
            format!("distance=0 nearest={word} message=5,11\n")
        );
        let (_, out, _) = gab(&["search", "--spec", path, "--word", "3,9,0,14"]);
        let (_, oracle, _) = gab(&["dist", "--spec", path, "--word", "3,9,0,14"]);
        assert_eq!(out.split(' ').next(), oracle.split(' ').next());
        assert_eq!(
            gab(&["classify", "--spec", path, "--poly", "0,0,0,1"]).1,
            "distance=2 deep_hole=true\n"
        );
    }

    #[test]
    fn outputs_do_not_depend_on_worker_count() {
        let spec = spec_file(GF16);
        let path = spec.path().to_str().unwrap();
        for metric in ["rank", "hamming"] {
            let one = gab(&["census", "--spec", path, "--metric", metric, "--jobs", "1"]);
            let many = gab(&["census", "--spec", path, "--metric", metric, "--jobs", "4"]);
            assert_eq!(one.0, 0);
            assert_eq!(one, many);
            assert_eq!(one.1.lines().count(), 257);
        }
        let one = gab(&[
            "family",
            "--spec",
            path,
            "--kind",
            "frobenius_shift",
            "--poly",
            "3,7",
            "--jobs",
            "1",
        ]);
        assert_eq!(
            one.1,
            "family,params,predicted,observed,agree\nfrobenius_shift,\"low=3,7\",deep_hole,deep_hole,true\n"
        );
    }

    #[test]
    fn census_file_round_trips() {
        let spec = spec_file(GF16);
        let path = spec.path().to_str().unwrap();
        let out = tempfile::NamedTempFile::new().unwrap();
        let out_path = out.path().to_str().unwrap();
        assert_eq!(gab(&["census", "--spec", path, "--out", out_path]).0, 0);
        let mut text = String::new();
        File::open(out.path()).unwrap().read_to_string(&mut text).unwrap();
        let ctx = CodeSpec::parse(GF16).unwrap().field().unwrap();
        let rows = report::read_census(&ctx, text.as_bytes()).unwrap();
        assert_eq!(rows.len(), 256);
        assert_eq!(rows.iter().filter(|r| r.is_deep_hole).count(), 30);
    }

    #[test]
    fn family_sweeps_and_quadric_counts() {
        let spec = spec_file("p=2\nm=5\nn=5\nk=1\n");
        let path = spec.path().to_str().unwrap();
        let (code, out, _) = gab(&["family", "--spec", path, "--kind", "binary_quartic", "--c", "3"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().skip(1).collect();
        assert_eq!(rows.len(), 32);
        assert!(rows.iter().all(|r| r.ends_with(",true")));
        assert!(rows[0].contains("deep_hole,deep_hole"));
        let (_, q, _) = gab(&["quadric", "--m", "5", "--b", "1"]);
        assert_eq!(q, "b,count,closed_form\n1,30,31\n");
        let (_, pairs, _) = gab(&["quadric", "--spec", path, "--b", "1", "--list"]);
        assert_eq!(pairs.lines().count(), 31);
        let (code, gap, _) = gab(&["quadric", "--spec", path, "--gap"]);
        assert_eq!(code, 0);
        assert_eq!(gap.lines().next(), Some("b"));
        assert_eq!(gab(&["quadric", "--m", "5", "--gap"]).0, 2);
    }

    #[test]
    fn exit_statuses() {
        let spec = spec_file(GF16);
        let path = spec.path().to_str().unwrap();
        assert_eq!(gab(&["frobnicate"]).0, 2);
        assert_eq!(gab(&["mindist"]).0, 2);
        assert_eq!(gab(&["mindist", "--spec", path, "--metric", "lee"]).0, 2);
        assert_eq!(gab(&["classify", "--spec", path]).0, 2);
        assert_eq!(gab(&["--help"]).0, 0);
        let (code, _, err) = gab(&["classify", "--spec", path, "--word", "0,0,16,0"]);
        assert_eq!(code, 1);
        assert!(err.contains("16"));
        assert_eq!(gab(&["mindist", "--spec", "/nonexistent/spec.txt"]).0, 1);
        let bad = spec_file("p=2\nm=4\nk=2\nbogus=1\n");
        let (code, _, err) = gab(&["mindist", "--spec", bad.path().to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(err.contains("line 4"));
        assert_eq!(gab(&["mindist", "--spec", path, "--cap", "10"]).0, 1);
        assert_eq!(gab(&["family", "--spec", path, "--kind", "k1_odd_m"]).0, 1);
    }
}
