use nilrigid::catalog::Catalog;
use nilrigid::reproduce::{run, Status, Suite};

#[test]
fn fast_suites_pass() {
    let cat = Catalog::builtin();
    for suite in [Suite::Dim5, Suite::Dim6, Suite::N73, Suite::Ideals, Suite::Counterexamples] {
        let rep = run(suite, &cat);
        let failed: Vec<_> = rep.items.iter().filter(|i| i.status != Status::Pass && i.status != Status::Skipped).collect();
        assert!(rep.pass, "{suite}: {failed:?}");
    }
}

#[test]
fn dim5_has_eight_items_and_no_skips() {
    let rep = run(Suite::Dim5, &Catalog::builtin());
    assert_eq!(rep.items.len(), 8);
    assert_eq!(rep.count(Status::Pass), 8);
}

#[test]
fn dim6_without_pack_skips_all_but_12346e() {
    let rep = run(Suite::Dim6, &Catalog::builtin());
    for it in &rep.items {
        let want = if it.id.starts_with("12346_E") { Status::Pass } else { Status::Skipped };
        assert_eq!(it.status, want, "{}", it.id);
        if it.status == Status::Skipped {
            assert!(it.note.as_deref().unwrap().contains("data pack"));
        }
    }
    assert!(rep.pass);
    assert!(rep.pack_checksum.is_none());
}

#[test]
fn all_is_the_union_of_the_parts() {
    let cat = Catalog::builtin();
    let all = run(Suite::All, &cat);
    let ids: Vec<String> = all.items.iter().map(|i| i.id.clone()).collect();
    let parts: Vec<String> = Suite::PARTS.iter().flat_map(|&s| run(s, &cat).items.into_iter().map(|i| i.id)).collect();
    assert_eq!(ids, parts);
    assert!(all.pass);
}

#[test]
fn report_json_is_deterministic_modulo_timing() {
    let cat = Catalog::builtin();
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        for it in v["items"].as_array_mut().unwrap() {
            it.as_object_mut().unwrap().remove("wall_ms");
        }
        v
    };
    let a = strip(run(Suite::Counterexamples, &cat).to_json());
    let b = strip(run(Suite::Counterexamples, &cat).to_json());
    assert_eq!(a, b);
}
