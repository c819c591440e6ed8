use optknots::families::{Atlas, FamilyForms, FamilyId, ForK, Linear};
use optknots_cli::{
    run, run_with_atlas, EnumOutput, FamilyOutput, GridOutput, HomologyOutput, McgOutput, VerifyOutput, EXIT_FAILED,
    EXIT_OK, EXIT_USAGE,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn call(args: &[&str]) -> (i32, String, String) {
    call_with(&Atlas::standard(), args)
}

fn call_with(atlas: &Atlas, args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("optknots").chain(args.iter().copied());
    let code = run_with_atlas(argv, atlas, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let v: T = serde_json::from_str(text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());
    let w: T = serde_json::from_str(&again).unwrap();
    assert_eq!(v, w);
    v
}

#[test]
fn family_v_minus_one() {
    let (code, out, _) = call(&["family", "--id", "V", "--k", "-1"]);
    assert_eq!(code, EXIT_OK);
    for needle in ["L(10,3)", "s=2", "x^5 y", "pseudo-Anosov"] {
        assert!(out.contains(needle), "missing {needle:?} in\n{out}");
    }
}

#[test]
fn family_iv_minus_one_json() {
    let (code, out, _) = call(&["family", "--id", "IV", "--k", "-1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let o: FamilyOutput = round_trip(&out);
    assert_eq!(o.schema_version, 1);
    assert_eq!(o.instance.space.to_string(), "L(12,5)");
    assert_eq!(o.instance.order_s, 3);
    assert_eq!(o.instance.monodromy.unwrap().to_string(), "x^4 y");
}

#[test]
fn family_usage_errors() {
    assert_eq!(call(&["family", "--id", "IV", "--k", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["family", "--id", "IV"]).0, EXIT_USAGE);
    assert_eq!(call(&["family", "--id", "VI", "--k", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["family", "--id", "VII", "--k", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["family", "--id", "VI", "--r", "1", "--q", "1"]).0, EXIT_USAGE);
    let (code, out, _) = call(&["family", "--id", "VI", "--r", "7", "--q", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("L(7,2)") && out.contains("s=7"), "{out}");
}

#[test]
fn enum_graph_counts() {
    let (code, out, _) = call(&["enum-graphs", "--t", "2", "--max-parallel", "3", "--require-max"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().last(), Some("count: 4"));
    let (_, out, _) = call(&["enum-graphs", "--t", "2", "--max-parallel", "2"]);
    assert_eq!(out.lines().last(), Some("count: 5"));
    let (_, out, _) = call(&["enum-graphs", "--t", "2", "--max-parallel", "2", "--json"]);
    let o: EnumOutput = round_trip(&out);
    assert_eq!((o.count, o.configs.len()), (5, 5));
    assert_eq!(call(&["enum-graphs", "--t", "3", "--max-parallel", "2"]).0, EXIT_USAGE);
}

#[test]
fn mcg_identity_and_types() {
    let (code, out, _) = call(&["mcg", "--word", ""]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("matrix: [[1, 0], [0, 1]]"), "{out}");
    assert!(out.contains("periodic (order 1)"), "{out}");
    let (_, out, _) = call(&["mcg", "--word", "x^4 y"]);
    assert!(out.contains("reducible"), "{out}");
    let (_, out, _) = call(&["mcg", "--word", "x^5 y", "--json"]);
    let o: McgOutput = round_trip(&out);
    assert_eq!(o.trace, -3);
    assert_eq!(o.bundle_h1.to_string(), "Z + Z/5");
    assert_eq!(call(&["mcg", "--word", "z^2"]).0, EXIT_USAGE);
}

#[test]
fn grid_witness_and_failure() {
    let (code, out, _) = call(&["grid", "--r", "11", "--q", "3", "--da", "2", "--db", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sequence: 0,1,2,5,8,0"), "{out}");
    let (code, out, _) = call(&["grid", "--r", "4", "--q", "1", "--da", "2", "--db", "3", "--qdot", "1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.starts_with("FAILURE"), "{out}");
    let (_, out, _) = call(&["grid", "--r", "7", "--q", "1", "--da", "2", "--db", "3", "--json"]);
    let o: GridOutput = round_trip(&out);
    assert!(o.sequence.is_none() && o.failure.is_some());
}

#[test]
fn homology_of_link_file() {
    let dir = std::env::temp_dir().join(format!("optknots-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.toml");
    std::fs::write(&path, "name = \"WHITEHEAD\"\nlinking = [[0, 0], [0, 0]]\ncoefficients = [\"-3\", \"-5/2\"]\n")
        .unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["homology", "--link", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("H1: Z/15"), "{out}");
    assert!(out.contains("core 1 (-3): order 3"), "{out}");
    assert!(out.contains("core 2 (-5/2): order 5"), "{out}");
    let (_, out, _) = call(&["homology", "--link", p, "--json"]);
    let o: HomologyOutput = round_trip(&out);
    assert_eq!(o.cores.len(), 2);

    std::fs::write(&path, "linking = [[0, 1], [1, 0]]\ncoefficients = [\"-\", \"2\"]\n").unwrap();
    let (code, out, _) = call(&["homology", "--link", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("order undefined"), "{out}");

    std::fs::write(&path, "linking = [[0, 1]]\ncoefficients = [\"1\"]\n").unwrap();
    assert_eq!(call(&["homology", "--link", p]).0, EXIT_USAGE);
    assert_eq!(call(&["homology", "--link", dir.join("missing.toml").to_str().unwrap()]).0, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_all_passes() {
    let (code, out, _) = call(&["verify", "--families", "all", "--k-range", "-20..20"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().last().unwrap().ends_with(", 0 failed"));
    let (code, out, _) = call(&["verify", "--families", "IV,V", "--k-range", "-20..20", "--json"]);
    assert_eq!(code, EXIT_OK);
    let o: VerifyOutput = round_trip(&out);
    assert!(o.passed);
    assert_eq!(o.total, 80);
}

#[test]
fn verify_output_independent_of_jobs() {
    let base = call(&["verify", "--k-range", "-20..20", "--jobs", "1"]).1;
    for jobs in ["2", "3", "8"] {
        assert_eq!(call(&["verify", "--k-range", "-20..20", "--jobs", jobs]).1, base, "jobs {jobs}");
    }
    let base = call(&["verify", "--k-range", "-5..7", "--json", "--jobs", "1"]).1;
    assert_eq!(call(&["verify", "--k-range", "-5..7", "--json", "--jobs", "5"]).1, base);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(call(&["verify", "--k-range", "5..-5"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--k-range", "abc"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--families", "I,IX"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--jobs", "0"]).0, EXIT_USAGE);
}

#[test]
fn help_is_not_an_error() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(run(["optknots", "--help"], &mut out, &mut err), EXIT_OK);
    assert!(String::from_utf8(out).unwrap().contains("enum-graphs"));
}

fn linear_variants(l: Linear) -> Vec<Linear> {
    vec![Linear::new(l.a + 1, l.b), Linear::new(l.a - 1, l.b), Linear::new(l.a, l.b + 1), Linear::new(l.a, l.b - 1)]
}

fn fork_variants<T: Clone>(f: &ForK<T>, bump: impl Fn(&T) -> Vec<T>) -> Vec<ForK<T>> {
    match f {
        ForK::Always(v) => bump(v).into_iter().map(ForK::Always).collect(),
        ForK::Unit { minus_one, plus_one } => {
            let mut out = Vec::new();
            for m in minus_one.iter().flat_map(&bump) {
                out.push(ForK::unit(Some(m), plus_one.clone()));
            }
            for p in plus_one.iter().flat_map(bump) {
                out.push(ForK::unit(minus_one.clone(), Some(p)));
            }
            out
        }
    }
}

/// Changes that describe the same knot: `{δa, δb}` is unordered, and a
/// type `{δa, δb}` torus knot is the `δa`th grid number one knot along one
/// meridian and the `δb`th along the other.
fn is_equivalent(orig: &FamilyForms, m: &FamilyForms) -> bool {
    let own = orig.torus_type.at(2).copied();
    if let (ForK::Always((a, b)), ForK::Always(t)) = (&orig.torus_type, &m.torus_type) {
        if *t == (*b, *a) {
            return true;
        }
    }
    match own {
        Some((a, b)) if m.grid_index != orig.grid_index && m.grid_index.a == 0 => {
            let g = m.grid_index.b.abs();
            (g == a as i64 || g == b as i64) && FamilyForms { grid_index: orig.grid_index, ..m.clone() } == *orig
        }
        _ => false,
    }
}

/// Every single-field corruption of the closed forms of one family.
fn mutants(f: &FamilyForms) -> Vec<(String, FamilyForms)> {
    let mut out = Vec::new();
    let mut push = |what: String, g: FamilyForms| out.push((what, g));
    for l in linear_variants(f.lens_p) {
        push(format!("lens_p {l:?}"), FamilyForms { lens_p: l, ..f.clone() });
    }
    for l in linear_variants(f.lens_q) {
        push(format!("lens_q {l:?}"), FamilyForms { lens_q: l, ..f.clone() });
    }
    for l in linear_variants(f.order) {
        push(format!("order {l:?}"), FamilyForms { order: l, ..f.clone() });
    }
    for l in linear_variants(f.grid_index) {
        push(format!("grid_index {l:?}"), FamilyForms { grid_index: l, ..f.clone() });
    }
    for d in [-1, 1] {
        push(format!("fixed {}", f.fixed + d), FamilyForms { fixed: f.fixed + d, ..f.clone() });
        push(format!("base {}", f.base + d), FamilyForms { base: f.base + d, ..f.clone() });
    }
    push("core".into(), FamilyForms { core: 1 - f.core, ..f.clone() });
    for m in fork_variants(&f.monodromy_exponent, |&e| vec![e - 1, e + 1]) {
        push(format!("monodromy {m:?}"), FamilyForms { monodromy_exponent: m, ..f.clone() });
    }
    let other_types = |&(a, b): &(u32, u32)| {
        [(2, 3), (2, 4), (3, 3), (3, 2), (2, 5)].into_iter().filter(|&t| t != (a, b)).collect::<Vec<_>>()
    };
    for t in fork_variants(&f.torus_type, other_types) {
        push(format!("torus_type {t:?}"), FamilyForms { torus_type: t, ..f.clone() });
    }
    // dropping a torus type or a monodromy
    if let ForK::Always(_) = f.torus_type {
        push("torus_type dropped".into(), FamilyForms { torus_type: ForK::unit(None, None), ..f.clone() });
    }
    if let ForK::Unit { minus_one, plus_one } = &f.monodromy_exponent {
        push(
            "monodromy k=-1 dropped".into(),
            FamilyForms { monodromy_exponent: ForK::unit(None, *plus_one), ..f.clone() },
        );
        push(
            "monodromy k=+1 dropped".into(),
            FamilyForms { monodromy_exponent: ForK::unit(*minus_one, None), ..f.clone() },
        );
    }
    out.retain(|(_, m)| !is_equivalent(f, m));
    out
}

#[test]
fn example_mutation_is_caught() {
    let mut atlas = Atlas::standard();
    atlas.forms.get_mut(&FamilyId::II).unwrap().lens_q = Linear::new(4, -1);
    let (code, out, _) = call_with(&atlas, &["verify", "--families", "all", "--k-range", "-20..20"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAIL"));
}

#[test]
fn every_single_mutation_is_caught() {
    let standard = Atlas::standard();
    let mut survivors = Vec::new();
    let mut tried = 0;
    for (&id, forms) in &standard.forms {
        for (what, m) in mutants(forms) {
            tried += 1;
            let mut atlas = standard.clone();
            atlas.forms.insert(id, m);
            let (code, _, _) =
                call_with(&atlas, &["verify", "--families", "all", "--k-range", "-20..20", "--jobs", "4"]);
            if code != EXIT_FAILED {
                survivors.push(format!("{id}: {what}"));
            }
        }
    }
    assert!(tried > 100);
    assert!(survivors.is_empty(), "undetected corruptions: {survivors:#?}");
}
