use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Subcommand};

use malcev_core::fixtures;
use malcev_core::loops::{
    doro_action_check, group_rep_loop, group_rep_product_check, gxg_autotopism_check, loop_check, smith_extension,
    CheckMode, ExtensionJson, FiniteLoop, GroupRep, LoopExtension, LoopJson, PermGroup, RepJson, SmithLoop,
};
use malcev_core::report::{IdentityRecord, VerificationReport};
use malcev_core::suite;

use super::{read_json, write_json, Failure, Run};

#[derive(Subcommand)]
pub enum LoopCmd {
    /// Latin-square and identity check of a Cayley table
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Moufang elements, or the Moufang laws on --subset
    Moufang(LoopSource),
    Nuclei(LoopSource),
    /// Doro relations for the action of a subloop of Moufang elements
    Doro(LoopSource),
    /// Build the loop from action data r(a,b), s(a,b) and check it
    Extend {
        /// Action data as JSON
        #[arg(long)]
        file: Option<PathBuf>,
        /// Use the action data of a loop fixture
        #[arg(long)]
        fixture: Option<String>,
        /// Write the Cayley table here
        #[arg(long)]
        table_out: Option<PathBuf>,
    },
    /// The loop V ⊗ W × G from two representations of a group
    FromReps(FromReps),
    /// G×G inside the autotopisms of a group
    Autotopism {
        #[arg(long, default_value = "s3")]
        group: String,
    },
}

#[derive(Args)]
pub struct LoopSource {
    /// Cayley table as JSON
    #[arg(long)]
    file: Option<PathBuf>,
    /// s3-sign-f3, s3-standard-f5, a5-deleted-f2
    #[arg(long)]
    fixture: Option<String>,
    /// s3, a5, cN
    #[arg(long)]
    group: Option<String>,
    /// Comma-separated element labels
    #[arg(long)]
    subset: Option<String>,
}

#[derive(Args)]
pub struct FromReps {
    #[arg(long, default_value = "s3")]
    group: String,
    /// trivial, sign, perm, deleted
    #[arg(long, default_value = "sign")]
    v: String,
    #[arg(long, default_value = "sign")]
    w: String,
    /// Representation of V as JSON (overrides --v)
    #[arg(long)]
    v_file: Option<PathBuf>,
    #[arg(long)]
    w_file: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long)]
    table_out: Option<PathBuf>,
    /// Write the action data r(a,b), s(a,b) here
    #[arg(long)]
    action_out: Option<PathBuf>,
}

/// The loop, and the subset used when none is given.
fn load(rep: &mut VerificationReport, src: &LoopSource) -> Result<(Arc<FiniteLoop>, Option<Vec<usize>>), Failure> {
    match (&src.file, &src.fixture, &src.group) {
        (Some(path), None, None) => {
            rep.fixture("loop", path.display().to_string());
            let j: LoopJson = read_json(path)?;
            let diag = loop_check(&j.table);
            if !diag.is_loop {
                return Err(Failure::Error(format!("not a loop: {}", diag.diagnostics.join("; "))));
            }
            Ok((Arc::new(FiniteLoop::from_json(&j)?), None))
        }
        (None, Some(name), None) => {
            rep.fixture("loop", name);
            let (_, _, _, e) = fixtures::smith_loop(name)?;
            let base = e.base_copy();
            Ok((Arc::new(e.table), Some(base)))
        }
        (None, None, Some(name)) => {
            rep.fixture("group", name);
            Ok((fixtures::group(name)?.table, None))
        }
        _ => Err(Failure::Usage("give exactly one of --file, --fixture, --group".into())),
    }
}

fn subset(t: &FiniteLoop, src: &LoopSource) -> Result<Option<Vec<usize>>, Failure> {
    let Some(s) = &src.subset else { return Ok(None) };
    s.split(',')
        .map(|l| t.index_of(l.trim()).ok_or_else(|| Failure::Usage(format!("unknown element label {l:?}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn mode(rep: &mut VerificationReport, t: &FiniteLoop, seed: u64) -> CheckMode {
    let m = CheckMode::for_order(t.order(), seed);
    if let CheckMode::Sampled { seed, .. } = m {
        rep.seed = Some(seed);
    }
    rep.fact("order", t.order()).fact("check_mode", m.describe());
    m
}

fn labels(t: &FiniteLoop, set: &[usize]) -> Vec<String> {
    set.iter().map(|&a| t.label(a).to_string()).collect()
}

fn group_of(name: &str) -> Result<PermGroup, Failure> {
    Ok(fixtures::group(name)?)
}

fn rep_of(g: &PermGroup, name: &str, file: &Option<PathBuf>, p: u64) -> Result<GroupRep, Failure> {
    match file {
        Some(path) => {
            let j: RepJson = read_json(path)?;
            if j.p != p {
                return Err(Failure::Usage(format!("{} is over F_{}, expected F_{p}", path.display(), j.p)));
            }
            Ok(GroupRep::from_json(g.table.clone(), &j)?)
        }
        None => Ok(fixtures::rep(g, name, p)?),
    }
}

/// Axioms of the built loop plus the round trip back to its action data.
fn extension_records(rep: &mut VerificationReport, e: &SmithLoop, seed: u64) -> Run {
    let t = &e.table;
    let m = mode(rep, t, seed);
    let diag = loop_check(&t.rows());
    rep.extend([
        IdentityRecord::single("loop-axioms", "Latin square with two-sided identity", (!diag.is_loop).then(|| diag.diagnostics.join("; "))),
        t.division_check(m),
        e.round_trip_check(),
    ]);
    if e.ext.base().moufang_elements(CheckMode::Exhaustive).len() == e.ext.base().order() {
        rep.extend(e.ext.relative_equations_check()?);
    }
    rep.extend(e.comma_check(seed));
    suite::loop_structure(rep, t, m);
    Ok(())
}

pub fn run(rep: &mut VerificationReport, cmd: LoopCmd, seed: u64) -> Run {
    match cmd {
        LoopCmd::Check { file } => {
            rep.fixture("loop", file.display().to_string());
            let j: LoopJson = read_json(&file)?;
            let diag = loop_check(&j.table);
            rep.fact("order", j.table.len());
            rep.extend([IdentityRecord::single(
                "loop-axioms",
                "Latin square with two-sided identity",
                (!diag.is_loop).then(|| diag.diagnostics.join("; ")),
            )]);
            if diag.is_loop {
                let t = FiniteLoop::from_json(&j)?;
                let m = mode(rep, &t, seed);
                rep.fact("identity", t.label(t.identity())).fact("is_group", t.is_group());
                rep.extend([t.division_check(m)]);
            }
        }
        LoopCmd::Moufang(src) => {
            let (t, _) = load(rep, &src)?;
            let m = mode(rep, &t, seed);
            match subset(&t, &src)? {
                Some(set) => rep.extend([t.moufang_check(&set, m)]),
                None => {
                    let me = t.moufang_elements(m);
                    rep.fact("moufang_elements", labels(&t, &me));
                    rep.extend([IdentityRecord::single("moufang-elements-subloop", "M(E) is a subloop", t.subloop_witness(&me))])
                }
            };
        }
        LoopCmd::Nuclei(src) => {
            let (t, _) = load(rep, &src)?;
            let m = mode(rep, &t, seed);
            let n = t.nuclei(m);
            rep.fact("left", labels(&t, &n.left))
                .fact("middle", labels(&t, &n.middle))
                .fact("right", labels(&t, &n.right))
                .fact("na", labels(&t, &n.na));
            rep.extend([IdentityRecord::single("nucleus-subloop", "Na(E) is a subloop", t.subloop_witness(&n.na))]);
        }
        LoopCmd::Doro(src) => {
            let (t, default) = load(rep, &src)?;
            let m = mode(rep, &t, seed);
            let set = match subset(&t, &src)? {
                Some(s) => s,
                None => default.unwrap_or_else(|| t.moufang_elements(m)),
            };
            rep.fact("subset", labels(&t, &set));
            rep.extend(doro_action_check(&t, &set, m)?);
        }
        LoopCmd::Extend { file, fixture, table_out } => {
            let ext = match (&file, &fixture) {
                (Some(path), None) => {
                    rep.fixture("extension", path.display().to_string());
                    LoopExtension::from_json(&read_json::<ExtensionJson>(path)?)?
                }
                (None, Some(name)) => {
                    rep.fixture("extension", name);
                    fixtures::smith_loop(name)?.3.ext
                }
                _ => return Err(Failure::Usage("give exactly one of --file, --fixture".into())),
            };
            let e = smith_extension(&ext)?;
            extension_records(rep, &e, seed)?;
            if let Some(path) = table_out {
                write_json(&path, &e.table.to_json())?;
            }
        }
        LoopCmd::FromReps(a) => {
            let g = group_of(&a.group)?;
            let v = rep_of(&g, &a.v, &a.v_file, a.p)?;
            let w = rep_of(&g, &a.w, &a.w_file, a.p)?;
            rep.fixture("group", &a.group).fixture("v", a.v_file.as_ref().map_or(a.v.clone(), |p| p.display().to_string()));
            rep.fixture("w", a.w_file.as_ref().map_or(a.w.clone(), |p| p.display().to_string()));
            rep.truncate("p", a.p as usize);
            let e = group_rep_loop(&v, &w)?;
            rep.extend([group_rep_product_check(&e, &v, &w)]);
            extension_records(rep, &e, seed)?;
            if let Some(path) = a.table_out {
                write_json(&path, &e.table.to_json())?;
            }
            if let Some(path) = a.action_out {
                write_json(&path, &e.ext.to_json())?;
            }
        }
        LoopCmd::Autotopism { group } => {
            rep.fixture("group", &group);
            let g = group_of(&group)?;
            rep.extend(gxg_autotopism_check(&g.table)?);
        }
    }
    Ok(())
}
