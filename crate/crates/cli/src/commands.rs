use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use modseries::text::{parse_module, parse_series, parse_subspaces, render_module, render_series, render_subspace};
use modseries::{
    canonical_sum_series, classify_simple, composition_series, external_direct_sum, factors, jordan_holder_check,
    schreier_refine, symbolic_iso as iso_rule, validate_normal_series, zassenhaus_witness, Error, JordanHolder, Mat,
    ModuleRep, NormalSeries, Ordinal, QuotientRep, SearchConfig, SeriesPairing, SymbolicSumSeries,
};

use crate::{Failure, Report};

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_module(path: &Path) -> Result<ModuleRep, Failure> {
    Ok(parse_module(&read(path)?)?)
}

fn load_series(path: &Path, rep: &ModuleRep) -> Result<NormalSeries, Failure> {
    let s = parse_series(&read(path)?, rep)?;
    validate_normal_series(&s)?;
    Ok(s)
}

fn ok(text: String) -> Outcome {
    Ok(Report { text, code: 0 })
}

fn push_matrix(out: &mut String, label: &str, m: &Mat) {
    let _ = writeln!(out, "{label} {}x{}", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

fn push_dims(out: &mut String, key: &str, dims: impl IntoIterator<Item = usize>) {
    let dims: Vec<String> = dims.into_iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "{key}: {}", dims.join(" "));
}

fn push_pairing(out: &mut String, pairing: &SeriesPairing) {
    let _ = writeln!(out, "pairs: {}", pairing.pairs.len());
    for p in &pairing.pairs {
        let _ = writeln!(out, "pair {} -> {}", p.left + 1, p.right + 1);
        push_matrix(out, "witness", p.witness.matrix());
    }
}

pub fn compose(module: &Path, cfg: &SearchConfig) -> Outcome {
    let rep = load_module(module)?;
    let series = composition_series(&rep, cfg)?;
    let fs = factors(&series)?;
    let quotients: Vec<&ModuleRep> = fs.iter().map(QuotientRep::quotient).collect();
    let classes = classify_simple(&quotients)?;

    let mut out = String::from("RESULT: ok\n");
    push_dims(&mut out, "dims", series.dims());
    let _ = writeln!(out, "factors: {}", fs.len());
    for (i, (q, (c, _))) in quotients.iter().zip(&classes).enumerate() {
        let _ = writeln!(out, "factor {}: dim {}, class {}", i + 1, q.dim(), c + 1);
    }
    let num_classes = classes.iter().map(|(c, _)| c + 1).max().unwrap_or(0);
    for c in 0..num_classes {
        let members: Vec<usize> = (0..classes.len()).filter(|&i| classes[i].0 == c).collect();
        let _ = writeln!(out, "class {}: dim {}, multiplicity {}", c + 1, quotients[members[0]].dim(), members.len());
    }
    out.push_str(&render_series(&series));
    ok(out)
}

pub fn jh(module: &Path, first: &Path, second: &Path, cfg: &SearchConfig) -> Outcome {
    let rep = load_module(module)?;
    let s = load_series(first, &rep)?;
    let t = load_series(second, &rep)?;
    match jordan_holder_check(&s, &t, cfg)? {
        JordanHolder::Isomorphic(pairing) => {
            let mut out = String::from("RESULT: isomorphic\n");
            push_pairing(&mut out, &pairing);
            ok(out)
        }
        JordanHolder::Mismatch(m) => {
            let mut out = String::from("RESULT: mismatch\n");
            let _ = writeln!(out, "class {}: dim {}, left {}, right {}", m.class, m.dim, m.left_count, m.right_count);
            Ok(Report { text: out, code: 1 })
        }
    }
}

pub fn refine(module: &Path, first: &Path, second: &Path) -> Outcome {
    let rep = load_module(module)?;
    let s = load_series(first, &rep)?;
    let t = load_series(second, &rep)?;
    let r = schreier_refine(&s, &t)?;
    let mut out = String::from("RESULT: ok\n");
    push_dims(&mut out, "left dims", r.left.dims());
    push_dims(&mut out, "right dims", r.right.dims());
    push_pairing(&mut out, &r.pairing);
    out.push_str("# left refinement\n");
    out.push_str(&render_series(&r.left));
    out.push_str("# right refinement\n");
    out.push_str(&render_series(&r.right));
    ok(out)
}

pub fn zassenhaus(module: &Path, subspaces: &Path) -> Outcome {
    let rep = load_module(module)?;
    let blocks = parse_subspaces(&read(subspaces)?, &rep)?;
    if blocks.len() != 4 {
        return Err(Error::Shape(format!("expected 4 subspace blocks (Ũ, U, W̃, W), found {}", blocks.len())).into());
    }
    let subs = blocks.into_iter().map(|b| rep.submodule(b)).collect::<Result<Vec<_>, _>>()?;
    let b = zassenhaus_witness(&subs[0], &subs[1], &subs[2], &subs[3])?;
    let mut out = String::from("RESULT: ok\n");
    let _ = writeln!(out, "left quotient dim: {}", b.left.dim());
    let _ = writeln!(out, "right quotient dim: {}", b.right.dim());
    let _ = writeln!(out, "domain dim: {}", b.domain.dim());
    out.push_str("# common kernel (W̃∩U)+(Ũ∩W)\n");
    out.push_str(&render_subspace(b.kernel.basis()));
    push_matrix(&mut out, "witness", b.witness.matrix());
    ok(out)
}

pub fn sum(modules: &[PathBuf], cfg: &SearchConfig) -> Outcome {
    let parts = modules.iter().map(|p| load_module(p)).collect::<Result<Vec<_>, _>>()?;
    let dec = external_direct_sum(&parts, cfg)?;
    let series = canonical_sum_series(&dec, cfg)?;
    let mut out = String::from("RESULT: ok\n");
    let _ = writeln!(out, "summands: {}", parts.len());
    push_dims(&mut out, "dims", parts.iter().map(ModuleRep::dim));
    out.push_str("# direct sum\n");
    out.push_str(&render_module(dec.total()));
    out.push_str("# canonical series\n");
    out.push_str(&render_series(&series));
    ok(out)
}

pub fn symbolic_iso(n: &str, m: &str) -> Outcome {
    let parse = |s: &str| s.parse::<Ordinal>();
    let (a, b) = (parse(n)?, parse(m)?);
    let left = SymbolicSumSeries::new(a.clone(), "U");
    let right = SymbolicSumSeries::new(b.clone(), "U");
    let same = iso_rule(&left, &right)?;
    let mut out = format!("RESULT: {}\n", if same { "isomorphic" } else { "distinct" });
    let _ = writeln!(out, "left: {a}, {}", a.cardinality());
    let _ = writeln!(out, "right: {b}, {}", b.cardinality());
    ok(out)
}
