use std::env;
use std::io::Write;

use num_bigint::BigUint;

use latpath_core::bijections::{
    dyck_representative, dyck_to_kary, hump_grow, hump_shrink, kary_to_dyck, phi, phi_hat, phi_hat_inverse,
    phi_inverse, prepend_up, psi_contract, psi_expand, strip_first_up, BijectionTrace,
};
use latpath_core::enumerate::{
    count_family, total_humps, total_peaks, visit_ka, visit_nm, FamilySpec, KaFamily, NmFamily,
};
use latpath_core::formulas::{
    binomial, catalan, d_nm, d_nm_j, f_nm_j, f_ud_nm_j, kary_count, kary_peaks_count, narayana,
};
use latpath_core::harness::{
    self, hump_total_rows, kary_peak_rows, parse_u64_list, parse_width_list, rational_narayana_rows, CountReport,
    HumpTotalRow, IdentityId, KaryPeakRow, NarayanaRow, Ranges, Summary,
};
use latpath_core::{Error, HorizontalWidth, NmWord, PathProfile, PathWord};

use crate::args::*;
use crate::Failure;

type Out<'a> = &'a mut dyn Write;
type CmdResult = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// Input that could not be read is a usage problem; input outside a map's
/// domain is a domain problem.
fn delegate(e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::InvalidProfile(_) | Error::StepNotAllowed { .. } | Error::Usage(_) => usage(e),
        Error::Domain(_) | Error::IndexOutOfRange { .. } | Error::NotCoprime { .. } => Failure::Domain(e.to_string()),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required")))
}

fn profile(p: &PathParams) -> Result<PathProfile, Failure> {
    let a = need(p.a, "a")?;
    match (&p.rises, p.k) {
        (Some(rises), _) => PathProfile::new(rises.iter().copied(), a).map_err(usage),
        (None, Some(k)) => PathProfile::ka(k, a).map_err(usage),
        (None, None) => Err(usage("--k or --rises is required")),
    }
}

fn single_k(p: &PathParams) -> Result<u64, Failure> {
    let k = need(p.k, "k")?;
    if k == 0 {
        return Err(usage("--k must be positive"));
    }
    Ok(u64::from(k))
}

fn peaks(p: &PathParams) -> Option<usize> {
    p.j.map(|j| j as usize)
}

fn cap(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match env::var("LATPATH_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("LATPATH_CAP must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn ka_spec(family: KaFamily, p: &PathParams) -> Result<FamilySpec, Failure> {
    let spec = FamilySpec::ka(family, &profile(p)?, need(p.n, "n")?);
    Ok(match peaks(p) {
        Some(j) => spec.with_peaks(j),
        None => spec,
    })
}

fn nm_spec(family: NmFamily, p: &PathParams) -> Result<FamilySpec, Failure> {
    let spec = FamilySpec::nm(family, need(p.n, "n")?, need(p.m, "m")?);
    Ok(match peaks(p) {
        Some(j) => spec.with_peaks(j),
        None => spec,
    })
}

pub fn count(args: &CountArgs, out: Out) -> CmdResult {
    use CountFamily::*;
    let p = &args.params;
    let value: BigUint = match args.family {
        Dyck => d_nm(need(p.n, "n")?, need(p.m, "m")?).map_err(usage)?,
        DyckPeaks => d_nm_j(need(p.n, "n")?, need(p.m, "m")?, need(p.j, "j")?).map_err(usage)?,
        Free => {
            let (n, m) = (need(p.n, "n")?, need(p.m, "m")?);
            binomial((n + m) as i64, n as i64)
        }
        FreePeaks => f_nm_j(need(p.n, "n")?, need(p.m, "m")?, need(p.j, "j")?),
        FreeUdPeaks => f_ud_nm_j(need(p.n, "n")?, need(p.m, "m")?, need(p.j, "j")?),
        Strict => count_family(&ka_spec(KaFamily::Strict, p)?),
        Super => count_family(&ka_spec(KaFamily::Super, p)?),
        SuperUp => count_family(&ka_spec(KaFamily::SuperPositiveUp, p)?),
        SuperWithUp => count_family(&ka_spec(KaFamily::SuperWithUp, p)?),
        Humps => total_humps(&profile(p)?, need(p.n, "n")?),
        Peaks => total_peaks(&profile(p)?, need(p.n, "n")?),
        Kary => kary_count(single_k(p)?, need(p.n, "n")?),
        KaryPeaks => kary_peaks_count(single_k(p)?, need(p.n, "n")?, need(p.j, "j")?),
        Catalan => catalan(need(p.n, "n")?),
        Narayana => narayana(need(p.n, "n")?, need(p.j, "j")?),
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn emit_word(out: Out, format: WordFormat, word: &str) -> std::io::Result<()> {
    match format {
        WordFormat::Text => writeln!(out, "{word}"),
        WordFormat::Json => writeln!(out, "{}", serde_json::Value::from(word)),
    }
}

pub fn enumerate(args: &EnumerateArgs, out: Out) -> CmdResult {
    use EnumerateFamily::*;
    let p = &args.params;
    let spec = match args.family {
        Ka => ka_spec(KaFamily::Strict, p)?,
        Super => ka_spec(KaFamily::Super, p)?,
        SuperUp => ka_spec(KaFamily::SuperPositiveUp, p)?,
        SuperWithUp => ka_spec(KaFamily::SuperWithUp, p)?,
        Dyck => nm_spec(NmFamily::Dyck, p)?,
        Free => nm_spec(NmFamily::Free, p)?,
        FreeUd => nm_spec(NmFamily::FreeUd, p)?,
    };
    let cap = cap(args.cap)?;
    let size = count_family(&spec);
    if size > BigUint::from(cap) {
        return Err(usage(format!("family has {size} members, above the cap of {cap} (raise --cap or LATPATH_CAP)")));
    }

    let mut status = Ok(());
    match &spec {
        FamilySpec::Ka { family, profile, order, peaks } => {
            visit_ka(profile, *family, *order, *peaks, |steps| {
                if status.is_ok() {
                    status = emit_word(out, args.format, &profile.format_steps(steps));
                }
            });
        }
        FamilySpec::Nm { family, n, m, peaks } => {
            visit_nm(*family, *n, *m, *peaks, |steps| {
                if status.is_ok() {
                    status = emit_word(out, args.format, &NmWord::new(steps.to_vec()).to_string());
                }
            });
        }
    }
    Ok(status?)
}

fn ka_word(args: &BijectArgs) -> Result<PathWord, Failure> {
    PathWord::parse(profile(&args.params)?, &args.word).map_err(delegate)
}

fn nm_word(args: &BijectArgs) -> Result<NmWord, Failure> {
    let w = NmWord::parse(&args.word).map_err(delegate)?;
    for (flag, want, got) in [("n", args.params.n, w.n()), ("m", args.params.m, w.m())] {
        if want.is_some_and(|v| v != got) {
            return Err(usage(format!("--{flag} is {} but the word has {flag} = {got}", want.unwrap())));
        }
    }
    Ok(w)
}

fn emit_trace(out: Out, trace: &BijectionTrace) -> std::io::Result<()> {
    writeln!(out, "{}", trace.to_json())
}

pub fn biject(args: &BijectArgs, out: Out) -> CmdResult {
    use Map::*;
    if args.trace && !matches!(args.map, Phi | PhiInverse) {
        return Err(usage("--trace applies to phi and phi-inverse only"));
    }
    match args.map {
        Phi => {
            let (w, trace) = phi(&ka_word(args)?, args.hump).map_err(delegate)?;
            writeln!(out, "{w}")?;
            if args.trace {
                emit_trace(out, &trace)?;
            }
        }
        PhiInverse => {
            let (w, hump, trace) = phi_inverse(&ka_word(args)?).map_err(delegate)?;
            writeln!(out, "{w}")?;
            writeln!(out, "{hump}")?;
            if args.trace {
                emit_trace(out, &trace)?;
            }
        }
        PsiExpand => {
            for w in psi_expand(&ka_word(args)?).map_err(delegate)? {
                writeln!(out, "{w}")?;
            }
        }
        PsiContract => writeln!(out, "{}", psi_contract(&ka_word(args)?).map_err(delegate)?)?,
        Shrink => writeln!(out, "{}", hump_shrink(&ka_word(args)?).map_err(delegate)?)?,
        Grow => writeln!(out, "{}", hump_grow(&ka_word(args)?).map_err(delegate)?)?,
        PhiHat => writeln!(out, "{}", phi_hat(&nm_word(args)?, args.peak).map_err(delegate)?)?,
        PhiHatInverse => {
            let (w, peak) = phi_hat_inverse(&nm_word(args)?).map_err(delegate)?;
            writeln!(out, "{w}")?;
            writeln!(out, "{peak}")?;
        }
        DyckRep => writeln!(out, "{}", dyck_representative(&nm_word(args)?).map_err(delegate)?.0)?,
        StripUp => writeln!(out, "{}", strip_first_up(&nm_word(args)?).map_err(delegate)?)?,
        PrependUp => writeln!(out, "{}", prepend_up(&nm_word(args)?))?,
        ToKary => writeln!(out, "{}", dyck_to_kary(&nm_word(args)?).map_err(delegate)?)?,
        FromKary => {
            let profile = PathProfile::kary(single_k(&args.params)? as u32).map_err(usage)?;
            let w = PathWord::parse(profile, &args.word).map_err(delegate)?;
            writeln!(out, "{}", kary_to_dyck(&w).map_err(delegate)?)?;
        }
    }
    Ok(())
}

fn ranges(r: &RangeParams) -> Result<Ranges, Failure> {
    let list = |v: &Option<String>| v.as_deref().map(parse_u64_list).transpose().map_err(usage);
    Ok(Ranges {
        k: list(&r.k)?,
        a: r.a.as_deref().map(parse_width_list).transpose().map_err(usage)?,
        n: list(&r.n)?,
        m: list(&r.m)?,
        j: list(&r.j)?,
        max_sum: r.max_sum,
        rises: r.rises.clone(),
    })
}

pub fn verify(args: &VerifyArgs, out: Out) -> CmdResult {
    let id: IdentityId = args.identity.parse().map_err(usage)?;
    let ranges = ranges(&args.ranges)?;
    let cap = BigUint::from(cap(args.cap)?);
    for inst in harness::instances(id, &ranges).map_err(usage)? {
        let size = harness::workload(id, &inst).map_err(usage)?;
        if size > cap {
            return Err(usage(format!(
                "{id} at {} enumerates {size} words, above the cap of {cap} (raise --cap or LATPATH_CAP)",
                inst.describe()
            )));
        }
    }

    let reports = harness::verify(id, &ranges, !args.no_timing).map_err(delegate)?;
    let summary = Summary::of(&reports);
    match args.format {
        ReportFormat::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
            writeln!(out, "{}", serde_json::json!({ "summary": summary }))?;
        }
        ReportFormat::Csv => {
            writeln!(out, "{}", CountReport::CSV_HEADER)?;
            for r in &reports {
                writeln!(out, "{}", r.to_csv_row())?;
            }
            eprintln!("{id}: {} passed, {} failed", summary.passed, summary.failed);
        }
    }
    if summary.all_pass() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn emit_rows<T: serde::Serialize>(
    out: Out,
    format: ReportFormat,
    header: &str,
    rows: &[T],
    csv: impl Fn(&T) -> String,
) -> std::io::Result<()> {
    match format {
        ReportFormat::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("rows serialize"))?;
            }
        }
        ReportFormat::Csv => {
            writeln!(out, "{header}")?;
            for r in rows {
                writeln!(out, "{}", csv(r))?;
            }
        }
    }
    Ok(())
}

pub fn table(args: &TableArgs, out: Out) -> CmdResult {
    let r = ranges(&args.ranges)?;
    if r.max_sum.is_some() || r.j.is_some() {
        return Err(usage("tables take --k, --a, --n, --m and --rises ranges only"));
    }
    let or = |v: Option<Vec<u64>>, lo: u64, hi: u64| v.unwrap_or_else(|| (lo..=hi).collect());
    match args.kind {
        TableKind::RationalNarayana => {
            let (rows, skipped) = rational_narayana_rows(&or(r.n, 1, 8), &or(r.m, 1, 8));
            for (n, m) in skipped {
                eprintln!("skipping (n, m) = ({n}, {m}): not coprime");
            }
            emit_rows(out, args.format, NarayanaRow::CSV_HEADER, &rows, NarayanaRow::to_csv_row)?;
        }
        TableKind::HumpTotals => {
            let ks: Vec<u32> =
                or(r.k, 1, 3).into_iter().map(|k| u32::try_from(k).map_err(usage)).collect::<Result<_, _>>()?;
            let widths = r.a.unwrap_or_else(|| vec![HorizontalWidth::Finite(1), HorizontalWidth::Finite(2)]);
            let rows = hump_total_rows(&ks, &widths, &or(r.n, 0, 8)).map_err(usage)?;
            emit_rows(out, args.format, HumpTotalRow::CSV_HEADER, &rows, HumpTotalRow::to_csv_row)?;
        }
        TableKind::KaryPeaks => {
            let rows = kary_peak_rows(&or(r.k, 1, 3), &or(r.n, 1, 6)).map_err(usage)?;
            emit_rows(out, args.format, KaryPeakRow::CSV_HEADER, &rows, KaryPeakRow::to_csv_row)?;
        }
    }
    Ok(())
}
