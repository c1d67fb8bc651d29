//! Command-line front end. All logic lives in the library; the `bcover`
//! binary just forwards its arguments here.
//!
//! Exit codes: 0 success, 1 verification failure, 2 guard exceeded,
//! 3 input error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::time::Duration;

use crate::biclique::{is_good_cover, verify_cover, CoverMultiset};
use crate::bounds::find_tight_d;
use crate::constructions::{
    cover_complete_katona, cover_cycle, cover_hypercube, cover_join, cover_lexicographic,
    cover_mycielski, cycle_cover_size, good_cover_cycle, mycielski_lower_extract,
};
use crate::enumerate::{enumerate_maximal_bicliques, max_biclique_edges, trivial_lower_bound};
use crate::graph::{join, lexicographic_product, mycielski, Family, Graph};
use crate::ilp::{bc_exact, SolveError, SolveLimits, SolveStatus};
use crate::invariants::chromatic_number;
use crate::io::{parse_cover, parse_edge_list, write_cover, write_edge_list};
use crate::lp::{bc_fractional_with_limits, write_lp_text};
use crate::rational::{format_rat, rat_frac, rat_u64, rat_zero, Rat};
use crate::report::{bounds_report, BoundsReport};

const USAGE: &str = "\
usage: bcover <command> [args]

commands:
  gen <family>                      write a graph in edge-list form
  bc <graph> -d <depth>             exact d-biclique cover number + witness
  bcfrac <graph>                    exact fractional cover number + dual
  verify <graph> <cover> [--good]   check a cover file against a graph
  construct <what> [params]         build a cover for a structured family
  bound <graph> -d <depth>          one-row bound report (TSV)
  reproduce                         regenerate the headline tables (TSV)

families (nest freely):
  cycle N | complete N | path N | hypercube K | petersen | empty N
  | multipartite N1,N2,... | mycielski F | complement F | lex F F | join F F

constructs:
  cycle N -d D | hypercube K -d D | katona N
  | lex F F -d D | join F F [F...] -d D | mycielski [--good] F -d D

flags: -d D, --good, --out FILE, --guard-nodes N, --guard-seconds S,
       --dump-lp FILE
";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

struct Options {
    depth: Option<usize>,
    good: bool,
    out: Option<String>,
    dump_lp: Option<String>,
    limits: SolveLimits,
}

enum CliError {
    Input(String),
    Guard(String),
    VerifyFail(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Guard(_) => EXIT_GUARD,
            CliError::VerifyFail(_) => EXIT_VERIFY_FAIL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Guard(m) | CliError::VerifyFail(m) => m,
        }
    }
}

fn input_err<T: std::fmt::Display>(e: T) -> CliError {
    CliError::Input(e.to_string())
}

fn solve_err(e: SolveError) -> CliError {
    match e {
        SolveError::GuardExceeded => CliError::Guard(e.to_string()),
        SolveError::Engine(crate::enumerate::EngineError::GuardExceeded { .. }) => {
            CliError::Guard(e.to_string())
        }
        SolveError::Invariant(crate::invariants::InvariantError::GuardExceeded { .. }) => {
            CliError::Guard(e.to_string())
        }
        other => CliError::Input(other.to_string()),
    }
}

/// Entry point used by the binary and the tests.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    match dispatch(args, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(args: &[String], out: &mut dyn Write) -> Result<(), CliError> {
    let (positional, opts) = split_flags(args)?;
    let mut toks = positional.iter().map(String::as_str).peekable();
    let Some(cmd) = toks.next() else {
        return Err(CliError::Input(USAGE.into()));
    };
    match cmd {
        "gen" => cmd_gen(&mut toks, &opts, out),
        "bc" => cmd_bc(&mut toks, &opts, out),
        "bcfrac" => cmd_bcfrac(&mut toks, &opts, out),
        "verify" => cmd_verify(&mut toks, &opts, out),
        "construct" => cmd_construct(&mut toks, &opts, out),
        "bound" => cmd_bound(&mut toks, &opts, out),
        "reproduce" => cmd_reproduce(&opts, out),
        "help" | "--help" | "-h" => {
            let _ = write!(out, "{USAGE}");
            Ok(())
        }
        other => Err(CliError::Input(format!(
            "unknown command `{other}`\n{USAGE}"
        ))),
    }
}

fn split_flags(args: &[String]) -> Result<(Vec<String>, Options), CliError> {
    let mut positional = Vec::new();
    let mut opts = Options {
        depth: None,
        good: false,
        out: None,
        dump_lp: None,
        limits: SolveLimits::default(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value_of = |name: &str| {
            it.next()
                .cloned()
                .ok_or_else(|| CliError::Input(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "-d" | "--depth" => {
                let v = value_of("-d")?;
                opts.depth = Some(
                    v.parse()
                        .map_err(|_| CliError::Input(format!("bad depth `{v}`")))?,
                );
            }
            "--good" => opts.good = true,
            "--out" => opts.out = Some(value_of("--out")?),
            "--dump-lp" => opts.dump_lp = Some(value_of("--dump-lp")?),
            "--guard-nodes" => {
                let v = value_of("--guard-nodes")?;
                opts.limits.max_nodes = v
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad node guard `{v}`")))?;
            }
            "--guard-seconds" => {
                let v = value_of("--guard-seconds")?;
                let secs: u64 = v
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad time guard `{v}`")))?;
                opts.limits.time_limit = Some(Duration::from_secs(secs));
            }
            _ => positional.push(arg.clone()),
        }
    }
    Ok((positional, opts))
}

fn parse_count(
    toks: &mut std::iter::Peekable<impl Iterator<Item = impl AsRef<str>>>,
    what: &str,
) -> Result<usize, CliError> {
    let tok = toks
        .next()
        .ok_or_else(|| CliError::Input(format!("missing {what}")))?;
    tok.as_ref()
        .parse()
        .map_err(|_| CliError::Input(format!("bad {what} `{}`", tok.as_ref())))
}

/// Recursive descent over the family grammar; returns the graph and the
/// token spelling that produced it.
fn parse_graph<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
) -> Result<(Graph, String), CliError> {
    let Some(head) = toks.next() else {
        return Err(CliError::Input("missing family".into()));
    };
    let build = |f: Family| f.build().map_err(input_err);
    match head {
        "cycle" | "complete" | "path" | "empty" => {
            let n = parse_count(toks, "size")?;
            let fam = match head {
                "cycle" => Family::Cycle(n),
                "complete" => Family::Complete(n),
                "path" => Family::Path(n),
                _ => Family::Empty(n),
            };
            Ok((build(fam)?, format!("{head} {n}")))
        }
        "hypercube" => {
            let k = parse_count(toks, "dimension")?;
            Ok((
                build(Family::Hypercube(k as u32))?,
                format!("hypercube {k}"),
            ))
        }
        "petersen" => Ok((build(Family::Petersen)?, "petersen".into())),
        "multipartite" | "complete_multipartite" => {
            let sizes = toks
                .next()
                .ok_or_else(|| CliError::Input("missing part sizes".into()))?;
            let parts: Vec<usize> = sizes
                .split(',')
                .map(|p| {
                    p.parse()
                        .map_err(|_| CliError::Input(format!("bad part size `{p}`")))
                })
                .collect::<Result<_, _>>()?;
            Ok((
                build(Family::CompleteMultipartite(parts))?,
                format!("multipartite {sizes}"),
            ))
        }
        "mycielski" => {
            let (g, name) = parse_graph(toks)?;
            Ok((mycielski(&g).0, format!("mycielski {name}")))
        }
        "complement" => {
            let (g, name) = parse_graph(toks)?;
            Ok((g.complement(), format!("complement {name}")))
        }
        "lex" => {
            let (g, gname) = parse_graph(toks)?;
            let (h, hname) = parse_graph(toks)?;
            let (p, _) = lexicographic_product(&g, &h).map_err(input_err)?;
            Ok((p, format!("lex {gname} {hname}")))
        }
        "join" => {
            let (g, gname) = parse_graph(toks)?;
            let (h, hname) = parse_graph(toks)?;
            let (j, _) = join(&[g, h]).map_err(input_err)?;
            Ok((j, format!("join {gname} {hname}")))
        }
        other => Err(CliError::Input(format!("unknown family `{other}`"))),
    }
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read `{path}`: {e}")))?;
    parse_edge_list(&text).map_err(input_err)
}

fn emit(opts: &Options, out: &mut dyn Write, content: &str) -> Result<Option<String>, CliError> {
    match &opts.out {
        Some(path) => {
            fs::write(path, content)
                .map_err(|e| CliError::Input(format!("cannot write `{path}`: {e}")))?;
            Ok(Some(path.clone()))
        }
        None => {
            let _ = write!(out, "{content}");
            Ok(None)
        }
    }
}

fn cmd_gen<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (g, _) = parse_graph(toks)?;
    expect_end(toks)?;
    emit(opts, out, &write_edge_list(&g))?;
    Ok(())
}

fn cmd_bc<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let path = toks
        .next()
        .ok_or_else(|| CliError::Input("bc needs a graph file".into()))?;
    expect_end(toks)?;
    let g = read_graph(path)?;
    let depth = opts
        .depth
        .ok_or_else(|| CliError::Input("bc needs -d <depth>".into()))?;
    if let Some(lp_path) = &opts.dump_lp {
        let text = write_lp_text(&g, depth, &opts.limits).map_err(solve_err)?;
        fs::write(lp_path, text)
            .map_err(|e| CliError::Input(format!("cannot write `{lp_path}`: {e}")))?;
    }
    let r = bc_exact(&g, depth, &opts.limits).map_err(solve_err)?;
    let status = match r.status {
        SolveStatus::Optimal => "optimal",
        SolveStatus::GuardExceeded => "guard_exceeded",
    };
    let _ = writeln!(
        out,
        "graph={path} d={depth} bc_d={} status={status} nodes={}",
        r.value, r.nodes_explored
    );
    // The witness goes to --out when given, to stdout otherwise.
    match &opts.out {
        Some(cover_path) => {
            fs::write(cover_path, write_cover(&r.witness))
                .map_err(|e| CliError::Input(format!("cannot write `{cover_path}`: {e}")))?;
        }
        None => {
            let _ = write!(out, "{}", write_cover(&r.witness));
        }
    }
    if r.status == SolveStatus::GuardExceeded {
        return Err(CliError::Guard(format!(
            "guard exceeded; best incumbent {}",
            r.value
        )));
    }
    Ok(())
}

fn cmd_bcfrac<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let path = toks
        .next()
        .ok_or_else(|| CliError::Input("bcfrac needs a graph file".into()))?;
    expect_end(toks)?;
    let g = read_graph(path)?;
    if let Some(lp_path) = &opts.dump_lp {
        let text = write_lp_text(&g, 1, &opts.limits).map_err(solve_err)?;
        fs::write(lp_path, text)
            .map_err(|e| CliError::Input(format!("cannot write `{lp_path}`: {e}")))?;
    }
    let r = bc_fractional_with_limits(&g, &opts.limits).map_err(solve_err)?;
    // Summarize the certificate: the dual is feasible and ties the value.
    let bicliques = enumerate_maximal_bicliques(&g).map_err(|e| solve_err(e.into()))?;
    let dual_total: Rat = r.dual.iter().map(|(_, y)| y.clone()).sum();
    let max_load = bicliques
        .iter()
        .map(|b| {
            r.dual
                .iter()
                .filter(|((u, v), _)| b.contains_edge(*u, *v))
                .map(|(_, y)| y.clone())
                .sum::<Rat>()
        })
        .max()
        .unwrap_or_else(rat_zero);
    let _ = writeln!(out, "graph={path} bc_star={}", format_rat(&r.value));
    let _ = writeln!(
        out,
        "dual: total={} max_biclique_load={} feasible={}",
        format_rat(&dual_total),
        format_rat(&max_load),
        dual_total == r.value && max_load <= rat_u64(1)
    );
    let _ = writeln!(
        out,
        "support: {} bicliques with positive weight",
        r.weights.len()
    );
    Ok(())
}

fn cmd_verify<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let gpath = toks
        .next()
        .ok_or_else(|| CliError::Input("verify needs a graph file".into()))?;
    let cpath = toks
        .next()
        .ok_or_else(|| CliError::Input("verify needs a cover file".into()))?;
    expect_end(toks)?;
    let g = read_graph(gpath)?;
    let text = fs::read_to_string(cpath)
        .map_err(|e| CliError::Input(format!("cannot read `{cpath}`: {e}")))?;
    let cover = parse_cover(&text).map_err(input_err)?;
    let v = verify_cover(&g, &cover).map_err(input_err)?;
    let min = v.profile.min_coverage().unwrap_or(0);
    if !v.pass {
        let deficient = v.profile.deficient_edges(cover.depth());
        let listed: Vec<String> = deficient
            .iter()
            .take(8)
            .map(|(u, v)| format!("({u},{v})"))
            .collect();
        let _ = writeln!(
            out,
            "FAIL depth={} size={} min_coverage={min} deficient={} invalid_entries={}",
            cover.depth(),
            cover.size(),
            listed.join(","),
            v.invalid_entries.len()
        );
        return Err(CliError::VerifyFail("cover does not verify".into()));
    }
    let _ = writeln!(
        out,
        "pass depth={} size={} min_coverage={min}",
        cover.depth(),
        cover.size()
    );
    if opts.good {
        match is_good_cover(&g, &cover).map_err(input_err)? {
            Some(_) => {
                let _ = writeln!(out, "good=yes");
            }
            None => {
                let _ = writeln!(out, "good=no");
                return Err(CliError::VerifyFail("cover is not good".into()));
            }
        }
    }
    Ok(())
}

fn optimal_cover(g: &Graph, depth: usize, limits: &SolveLimits) -> Result<CoverMultiset, CliError> {
    if g.edge_count() == 0 {
        return Ok(CoverMultiset::empty(depth));
    }
    let r = bc_exact(g, depth, limits).map_err(solve_err)?;
    if r.status != SolveStatus::Optimal {
        return Err(CliError::Guard("cover solve hit the guard".into()));
    }
    Ok(r.witness)
}

fn cmd_construct<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let Some(what) = toks.next() else {
        return Err(CliError::Input("construct needs a target".into()));
    };
    let depth = opts.depth.unwrap_or(1);
    if depth == 0 {
        return Err(CliError::Input("depth must be positive".into()));
    }
    let (target, cover) = match what {
        "cycle" => {
            let n = parse_count(toks, "cycle size")?;
            let g = Family::Cycle(n).build().map_err(input_err)?;
            (g, cover_cycle(n, depth).map_err(input_err)?)
        }
        "hypercube" => {
            let k = parse_count(toks, "dimension")? as u32;
            let g = Family::Hypercube(k).build().map_err(input_err)?;
            (g, cover_hypercube(k, depth).map_err(input_err)?)
        }
        "katona" => {
            let n = parse_count(toks, "size")?;
            if depth != 1 {
                return Err(CliError::Input(
                    "katona builds a 1-cover; combine with -d 1".into(),
                ));
            }
            let g = Family::Complete(n).build().map_err(input_err)?;
            (g, cover_complete_katona(n).map_err(input_err)?)
        }
        "lex" => {
            let (g, _) = parse_graph(toks)?;
            let (h, _) = parse_graph(toks)?;
            let cover_g = optimal_cover(&g, depth, &opts.limits)?;
            let cover_h = optimal_cover(&h, depth, &opts.limits)?;
            let (_, coloring) = chromatic_number(&g.complement()).map_err(input_err)?;
            let (product, _) = lexicographic_product(&g, &h).map_err(input_err)?;
            let cover =
                cover_lexicographic(&g, &cover_g, &h, &cover_h, &coloring).map_err(input_err)?;
            (product, cover)
        }
        "join" => {
            let mut parts: Vec<(Graph, String)> = Vec::new();
            while toks.peek().is_some() {
                parts.push(parse_graph(toks)?);
            }
            if parts.len() < 2 {
                return Err(CliError::Input("join needs at least two parts".into()));
            }
            let graphs: Vec<Graph> = parts.iter().map(|(g, _)| g.clone()).collect();
            let covers: Vec<CoverMultiset> = graphs
                .iter()
                .map(|g| optimal_cover(g, depth, &opts.limits))
                .collect::<Result<_, _>>()?;
            let kk = Family::Complete(graphs.len()).build().map_err(input_err)?;
            let kk_cover = optimal_cover(&kk, depth, &opts.limits)?;
            let sizes: Vec<usize> = graphs.iter().map(Graph::n).collect();
            let cover_refs: Vec<&CoverMultiset> = covers.iter().collect();
            let cover = cover_join(&sizes, &cover_refs, &kk_cover).map_err(input_err)?;
            let (joined, _) = join(&graphs).map_err(input_err)?;
            (joined, cover)
        }
        "mycielski" => {
            let (g, _) = parse_graph(toks)?;
            let cover_g = optimal_cover(&g, depth, &opts.limits)?;
            let orientation = if opts.good {
                match is_good_cover(&g, &cover_g).map_err(input_err)? {
                    Some(o) => Some(o),
                    None => {
                        return Err(CliError::VerifyFail(
                            "no good orientation found for the optimal cover".into(),
                        ))
                    }
                }
            } else {
                None
            };
            let (m, _) = mycielski(&g);
            let cover = cover_mycielski(&g, &cover_g, orientation.as_ref()).map_err(input_err)?;
            (m, cover)
        }
        other => Err(CliError::Input(format!("unknown construct `{other}`")))?,
    };
    expect_end(toks)?;
    // Never emit an unverified cover.
    let v = verify_cover(&target, &cover).map_err(input_err)?;
    if !v.pass {
        return Err(CliError::VerifyFail(
            "constructed cover failed verification".into(),
        ));
    }
    let text = write_cover(&cover);
    if let Some(path) = emit(opts, out, &text)? {
        let _ = writeln!(
            out,
            "construct {what}: size={} depth={} verified -> {path}",
            cover.size(),
            cover.depth()
        );
    }
    Ok(())
}

fn cmd_bound<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let path = toks
        .next()
        .ok_or_else(|| CliError::Input("bound needs a graph file".into()))?;
    expect_end(toks)?;
    let g = read_graph(path)?;
    let depth = opts
        .depth
        .ok_or_else(|| CliError::Input("bound needs -d <depth>".into()))?;
    let report = bounds_report(&g, path, depth, &opts.limits).map_err(solve_err)?;
    let _ = writeln!(out, "{}", BoundsReport::tsv_header());
    let _ = writeln!(out, "{}", report.tsv_row());
    Ok(())
}

fn expect_end<'a, I: Iterator<Item = &'a str>>(
    toks: &mut std::iter::Peekable<I>,
) -> Result<(), CliError> {
    match toks.next() {
        None => Ok(()),
        Some(t) => Err(CliError::Input(format!("unexpected argument `{t}`"))),
    }
}

fn cmd_reproduce(opts: &Options, out: &mut dyn Write) -> Result<(), CliError> {
    let mut buf = String::new();
    reproduce_tables(&opts.limits, &mut buf)?;
    let _ = write!(out, "{buf}");
    Ok(())
}

/// Regenerates the headline values as TSV tables: the cycle formula, the
/// complete-graph values, the fractional closed forms, the edge-transitive
/// ratio, the hypercube sandwich, and the Mycielski chain.
fn reproduce_tables(limits: &SolveLimits, buf: &mut String) -> Result<(), CliError> {
    let _ = writeln!(buf, "# cycles: formula vs exact solve vs construction");
    let _ = writeln!(buf, "graph\td\tformula\texact\tconstruction\tverified");
    for n in 3..=9usize {
        for d in 1..=4usize {
            let g = Family::Cycle(n).build().map_err(input_err)?;
            let formula = cycle_cover_size(n as u64, d as u64);
            let r = bc_exact(&g, d, limits).map_err(solve_err)?;
            let cover = cover_cycle(n, d).map_err(input_err)?;
            let ok = verify_cover(&g, &cover).map_err(input_err)?.pass;
            let _ = writeln!(
                buf,
                "cycle {n}\t{d}\t{formula}\t{}\t{}\t{ok}",
                r.value,
                cover.size()
            );
        }
    }

    let _ = writeln!(buf, "\n# complete graphs at depth 1");
    let _ = writeln!(buf, "graph\tceil_log2\texact\tkatona_size\tverified");
    for n in 2..=8usize {
        let g = Family::Complete(n).build().map_err(input_err)?;
        let r = bc_exact(&g, 1, limits).map_err(solve_err)?;
        let cover = cover_complete_katona(n).map_err(input_err)?;
        let ok = verify_cover(&g, &cover).map_err(input_err)?.pass;
        let log = (usize::BITS - (n - 1).leading_zeros()) as u64;
        let _ = writeln!(
            buf,
            "complete {n}\t{log}\t{}\t{}\t{ok}",
            r.value,
            cover.size()
        );
    }

    let _ = writeln!(buf, "\n# fractional cover numbers of complete graphs");
    let _ = writeln!(buf, "graph\tbc_star\tclosed_form\tmatch");
    for n in 2..=8usize {
        let g = Family::Complete(n).build().map_err(input_err)?;
        let got = bc_fractional_with_limits(&g, limits)
            .map_err(solve_err)?
            .value;
        let want = if n % 2 == 0 {
            rat_frac(2 * (n as i64 - 1), n as i64)
        } else {
            rat_frac(2 * n as i64, n as i64 + 1)
        };
        let _ = writeln!(
            buf,
            "complete {n}\t{}\t{}\t{}",
            format_rat(&got),
            format_rat(&want),
            got == want
        );
    }

    let _ = writeln!(
        buf,
        "\n# edge-transitive graphs: bc_star = |E|/B; tight depth within 6"
    );
    let _ = writeln!(
        buf,
        "graph\tedges\tB\tbc_star\tratio_match\ttight_d\tbc_at_tight_d"
    );
    let samples: Vec<(&str, Graph)> = vec![
        ("cycle 5", Family::Cycle(5).build().map_err(input_err)?),
        ("cycle 6", Family::Cycle(6).build().map_err(input_err)?),
        (
            "complete 4",
            Family::Complete(4).build().map_err(input_err)?,
        ),
        (
            "complete 5",
            Family::Complete(5).build().map_err(input_err)?,
        ),
        (
            "hypercube 3",
            Family::Hypercube(3).build().map_err(input_err)?,
        ),
        ("petersen", Family::Petersen.build().map_err(input_err)?),
    ];
    for (name, g) in &samples {
        let (b, _) = max_biclique_edges(g).map_err(|e| solve_err(e.into()))?;
        let star = bc_fractional_with_limits(g, limits)
            .map_err(solve_err)?
            .value;
        let ratio = rat_frac(g.edge_count() as i64, b as i64);
        let tight = find_tight_d(g, 6, limits).map_err(solve_err)?;
        let (td, tv) = tight
            .map(|t| (t.depth.to_string(), t.result.value.to_string()))
            .unwrap_or_else(|| ("unknown_within_budget".into(), "-".into()));
        let _ = writeln!(
            buf,
            "{name}\t{}\t{b}\t{}\t{}\t{td}\t{tv}",
            g.edge_count(),
            format_rat(&star),
            star == ratio
        );
    }

    let _ = writeln!(
        buf,
        "\n# hypercube dimension 5: sandwich closes without search"
    );
    let _ = writeln!(buf, "d\ttrivial_lower\tconstruction\texact_closed");
    for d in 1..=3usize {
        let g = Family::Hypercube(5).build().map_err(input_err)?;
        let lower = trivial_lower_bound(&g, d).map_err(|e| solve_err(e.into()))?;
        let cover = cover_hypercube(5, d).map_err(input_err)?;
        let closed = lower == cover.size();
        let _ = writeln!(buf, "{d}\t{lower}\t{}\t{closed}", cover.size());
    }

    let _ = writeln!(buf, "\n# mycielski of cycle 5");
    let _ = writeln!(buf, "quantity\tvalue");
    let c5 = Family::Cycle(5).build().map_err(input_err)?;
    let (m, labeling) = mycielski(&c5);
    let r = bc_exact(&m, 2, limits).map_err(solve_err)?;
    let _ = writeln!(buf, "bc_2(M(cycle 5))\t{}", r.value);
    let (good_cover, orientation) = good_cover_cycle(5, 2).map_err(input_err)?;
    let lifted = cover_mycielski(&c5, &good_cover, Some(&orientation)).map_err(input_err)?;
    let lifted_ok = verify_cover(&m, &lifted).map_err(input_err)?.pass;
    let _ = writeln!(
        buf,
        "good_lift_size\t{} (verified={lifted_ok})",
        lifted.size()
    );
    let extracted = mycielski_lower_extract(&m, &labeling, &r.witness).map_err(input_err)?;
    let _ = writeln!(buf, "extracted_4cover_size\t{}", extracted.size());
    let _ = writeln!(buf, "bc_4(cycle 5) formula\t{}", cycle_cover_size(5, 4));
    Ok(())
}
