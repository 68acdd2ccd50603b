//! Regenerates the committed example corpus.
//!
//! Every coefficient in the corpus comes out of the search engine's
//! exhaustive sweeps; composite files are built from those finds with the
//! library constructions. Selection rules are first-by-stream-position, so
//! rerunning this binary reproduces the directory byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use clap::Parser;
use serde::Serialize;

use homcsa::linalg::int;
use homcsa::{
    regular_bimodule, ActionTensor, Bimodule, LinearMap, PairedAlgebras, Representation,
};
use homcsa_cli::formats::{
    canonical_json, rational_string, AlgebraDoc, BialgebraDoc, BimoduleDoc, Doc,
    LieMatchedPairDoc, MatchedPairDoc, RepresentationDoc,
};
use homcsa_cli::search::{
    run_search, Found, SearchConfig, SearchMode, SearchTarget, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(about = "Regenerate the example corpus from exhaustive searches")]
struct Args {
    #[arg(long, default_value = "corpus")]
    out: PathBuf,
}

#[derive(Serialize)]
struct SweepCount {
    target: &'static str,
    dim: usize,
    set: Vec<String>,
    mode: &'static str,
    candidates: u64,
    passers: u64,
}

fn sweep(dim: usize, set: &[i64], target: SearchTarget) -> Result<(Vec<Found>, SweepCount)> {
    let set: Vec<_> = set.iter().map(|&v| int(v)).collect();
    let config = SearchConfig {
        dim,
        set: set.clone(),
        mode: SearchMode::Exhaustive,
        target,
        budget: DEFAULT_BUDGET,
    };
    let candidates = (set.len() as u64).pow(config.candidate_len() as u32);
    let found = run_search(&config)?;
    let name = match target {
        SearchTarget::HomCsa => "hom-csa",
        SearchTarget::HomLie => "hom-lie",
        SearchTarget::Bialgebra => "bialgebra",
    };
    eprintln!("{name} sweep over dim {dim}: {} of {candidates} pass", found.len());
    let count = SweepCount {
        target: name,
        dim,
        set: set.iter().map(rational_string).collect(),
        mode: "exhaustive",
        candidates,
        passers: found.len() as u64,
    };
    Ok((found, count))
}

fn write_doc(dir: &Path, file: &str, doc: &Doc) -> Result<()> {
    let path = dir.join(file);
    fs::write(&path, canonical_json(doc)).with_context(|| format!("writing {}", path.display()))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn main() -> Result<()> {
    let args = Args::parse();
    fs::create_dir_all(&args.out)?;
    let mut counts = Vec::new();

    let (csa, count) = sweep(2, &[-1, 0, 1], SearchTarget::HomCsa)?;
    counts.push(count);

    // An algebra with a genuine involutive twist: alpha is not the identity
    // but squares to it, and the product is nonzero.
    let involutive = csa
        .iter()
        .find(|f| {
            !f.primal.twist().is_identity()
                && f.primal.is_twist_involutive()
                && !f.primal.mul().is_zero()
        })
        .context("no passer with a nontrivial involutive twist")?;
    let involutive_doc =
        AlgebraDoc::from_algebra(Some("involutive-twist".into()), &involutive.primal);
    write_doc(&args.out, "csa_involutive.json", &Doc::Algebra(involutive_doc.clone()))?;

    // A twist that does not square to the identity, chosen so that the dual
    // of its regular bimodule fails: the hypothesis in the duality statement
    // is doing real work.
    let noninvolutive = csa
        .iter()
        .find(|f| {
            !f.primal.is_twist_involutive()
                && !regular_bimodule(&f.primal).dual().check().passed()
        })
        .context("no passer whose regular bimodule has a failing dual")?;
    let noninvolutive_doc =
        AlgebraDoc::from_algebra(Some("noninvolutive-twist".into()), &noninvolutive.primal);
    write_doc(
        &args.out,
        "csa_noninvolutive.json",
        &Doc::Algebra(noninvolutive_doc.clone()),
    )?;

    let reg = regular_bimodule(&involutive.primal);
    ensure!(reg.check().passed() && reg.dual().check().passed());
    write_doc(
        &args.out,
        "regular_bimodule_involutive.json",
        &Doc::Bimodule(BimoduleDoc::from_bimodule(
            Some("regular-actions".into()),
            involutive_doc.clone(),
            &reg,
        )),
    )?;

    let reg_bad_dual = regular_bimodule(&noninvolutive.primal);
    ensure!(reg_bad_dual.check().passed() && !reg_bad_dual.dual().check().passed());
    write_doc(
        &args.out,
        "regular_bimodule_noninvolutive.json",
        &Doc::Bimodule(BimoduleDoc::from_bimodule(
            Some("regular-actions-dual-fails".into()),
            noninvolutive_doc,
            &reg_bad_dual,
        )),
    )?;

    // Zero actions admit any module twist; enumerate {0,1} matrices in the
    // search engine's digit order and keep the first nonzero non-involution
    // that still gives a passing bimodule.
    let zero_action = (0u32..16)
        .map(|bits| {
            let phi = LinearMap::from_fn(2, 2, |r, c| int(((bits >> (3 - (r * 2 + c))) & 1) as i64));
            Bimodule::new(
                involutive.primal.clone(),
                ActionTensor::zero(2, 2),
                ActionTensor::zero(2, 2),
                phi,
            )
            .expect("matching dims")
        })
        .find(|b| {
            !b.phi().is_zero()
                && !b.phi().compose(b.phi()).expect("square maps compose").is_identity()
                && b.check().passed()
        })
        .context("no passing non-involutive module twist")?;
    ensure!(zero_action.dual().check().passed());
    write_doc(
        &args.out,
        "bimodule_noninvolutive_phi.json",
        &Doc::Bimodule(BimoduleDoc::from_bimodule(
            Some("noninvolutive-phi".into()),
            involutive_doc,
            &zero_action,
        )),
    )?;

    let (lie, count) = sweep(2, &[-1, 0, 1], SearchTarget::HomLie)?;
    counts.push(count);

    let bracket = lie
        .iter()
        .find(|f| !f.primal.mul().is_zero())
        .context("no passer with a nonzero bracket")?;
    let bracket_doc = AlgebraDoc::from_algebra(Some("nonzero-bracket".into()), &bracket.primal);
    write_doc(&args.out, "hom_lie.json", &Doc::Algebra(bracket_doc.clone()))?;

    // The bracket acting on itself by left multiplication is the adjoint
    // representation of a skew algebra.
    let adjoint = Representation::new(
        bracket.primal.clone(),
        bracket.primal.left_rep(),
        bracket.primal.twist().clone(),
    )
    .expect("matching dims");
    ensure!(adjoint.check().passed());
    write_doc(
        &args.out,
        "representation.json",
        &Doc::Representation(RepresentationDoc::from_representation(
            Some("adjoint".into()),
            bracket_doc,
            &adjoint,
        )),
    )?;

    let (bi, count) = sweep(2, &[0, 1], SearchTarget::Bialgebra)?;
    counts.push(count);

    // A pair with nonzero products on both sides and an involutive twist on
    // which every structure agrees: the standard matched pair, its induced
    // bracket pair, the double, and the cocycle conditions all pass.
    let star = bi
        .iter()
        .find(|f| {
            let Some(dual) = &f.dual_mul else { return false };
            if dual.is_zero() || f.primal.mul().is_zero() || !f.primal.is_twist_involutive() {
                return false;
            }
            let paired = PairedAlgebras::new(f.primal.clone(), dual.clone())
                .expect("search emits matching dims");
            paired.equivalence_report().all_hold()
        })
        .context("no fully compatible pair with nonzero products")?;
    let paired = PairedAlgebras::new(
        star.primal.clone(),
        star.dual_mul.clone().expect("bialgebra passer"),
    )
    .expect("matching dims");
    write_doc(
        &args.out,
        "bialgebra.json",
        &Doc::Bialgebra(BialgebraDoc::from_paired(Some("compatible-pair".into()), &paired)),
    )?;

    let pair = paired.standard_matched_pair();
    ensure!(pair.check().passed());
    write_doc(
        &args.out,
        "matched_pair.json",
        &Doc::MatchedPair(MatchedPairDoc::from_pair(Some("standard-pair".into()), &pair)),
    )?;

    let lie_pair = pair.induced_lie_pair();
    ensure!(lie_pair.check().passed());
    write_doc(
        &args.out,
        "lie_matched_pair.json",
        &Doc::LieMatchedPair(LieMatchedPairDoc::from_pair(
            Some("standard-bracket-pair".into()),
            &lie_pair,
        )),
    )?;

    let double = paired.standard_manin_algebra();
    ensure!(double.check_center_symmetric().passed());
    write_doc(
        &args.out,
        "manin_double.json",
        &Doc::Algebra(AlgebraDoc::from_algebra(Some("standard-double".into()), &double)),
    )?;

    let counts_path = args.out.join("counts.json");
    let mut body = serde_json::to_string_pretty(&serde_json::json!({ "sweeps": counts }))?;
    body.push('\n');
    fs::write(&counts_path, body)?;
    eprintln!("wrote {}", counts_path.display());

    fs::write(args.out.join("README.md"), readme())?;
    eprintln!("wrote {}", args.out.join("README.md").display());
    Ok(())
}

fn readme() -> String {
    r#"# Example corpus

Every file in this directory was produced by `corpusgen`, which drives the
same search engine as `homcsa search`. Regenerate the whole directory with

```
cargo run --release -p homcsa-cli --bin corpusgen -- --out corpus
```

The output is deterministic: the searches are exhaustive, passers are kept
in stream order, and each file is the first passer satisfying its selection
rule, serialized in canonical form. All indices in these files are 0-based.

## Files

- `csa_involutive.json`: first center-symmetric algebra from the exhaustive
  dim-2 sweep over coefficients {-1, 0, 1} whose twist is not the identity
  but squares to it, with a nonzero product.
- `csa_noninvolutive.json`: first passer from the same sweep whose twist
  does not square to the identity and whose regular bimodule has a failing
  dual, showing the involutivity hypothesis in the duality statement is not
  decorative.
- `regular_bimodule_involutive.json`: the algebra above acting on itself by
  left and right multiplication. Its dual bimodule passes.
- `regular_bimodule_noninvolutive.json`: the regular bimodule of the
  noninvolutive algebra. The file itself is a valid bimodule; its dual
  fails, which `homcsa derive dual-bimodule` reports with exit code 1.
- `bimodule_noninvolutive_phi.json`: zero actions with the first nonzero
  {0,1} module twist in digit order whose square is not the identity. The
  bimodule and its dual both pass, so involutivity of phi is sufficient but
  not necessary for the dual to pass.
- `hom_lie.json`: first algebra from the dim-2 sweep that satisfies
  skewness and the twisted Jacobi identity with a nonzero bracket.
- `representation.json`: that bracket acting on itself by left
  multiplication, with the algebra twist as module twist (the adjoint
  representation).
- `bialgebra.json`: first pair from the exhaustive dim-2 sweep over
  coefficients {0, 1} with a nonzero dual product for which all four
  compatibility conditions hold at once (double is center-symmetric,
  standard matched pair passes, induced bracket pair passes, both cocycle
  conditions pass). Note that the four conditions do not agree on every
  pair; see the top-level README.
- `matched_pair.json`, `lie_matched_pair.json`, `manin_double.json`: the
  standard matched pair of `bialgebra.json`, its induced bracket-level
  pair, and the double built on the direct sum with the transpose twist.
- `counts.json`: candidate and passer counts for the three sweeps, used by
  the acceptance tests as a drift check.
"#
    .to_string()
}
