use std::process::{Command, Output};

use shiftfree_cli::report::{ConstructDoc, ReportDoc, TableDoc, VerifyDoc};

fn shiftfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftfree"))
        .args(args)
        .env_remove("SHIFTFREE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(
    o: &Output,
) -> T {
    let text = stdout(o);
    let doc: T = serde_json::from_str(&text).expect("valid document");
    // re-serializing gives the same document
    let again: T = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, again);
    doc
}

#[test]
fn bounds_examples() {
    let o = shiftfree(&[
        "bounds",
        "Z2024",
        "cosets(order=8; reps=0,1)",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDoc = json(&o);
    assert_eq!((doc.bounds.thm2_lower, doc.bounds.upper), (1787, 1898));
    assert_eq!(doc.stabilizer.order, 8);
    assert_eq!(doc.group.orders, [2024]);

    let doc: ReportDoc = json(&shiftfree(&["bounds", "Z4", "{0,2}", "--format", "json"]));
    assert_eq!((doc.bounds.best_lower, doc.bounds.upper), (3, 3));
    assert!(doc.bounds.coincide);

    let doc: ReportDoc = json(&shiftfree(&["bounds", "Z6", "{0}", "--format", "json"]));
    let b = doc.bounds;
    assert_eq!([b.thm1_lower, b.lemma_lower, b.thm2_lower, b.upper], [1; 4]);

    let o = shiftfree(&["bounds", "Z6", "{0,1}", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "group,size,s,h,thm1_lower,lemma_lower,thm2_lower,upper\nZ6,6,2,1,1,3,3,4\n"
    );
}

#[test]
fn exact_examples() {
    let doc: ReportDoc = json(&shiftfree(&["exact", "Z6", "{0,1}", "--format", "json"]));
    let e = doc.exact.unwrap();
    assert_eq!(e.n, 4);
    assert_eq!(e.avoider.len(), 3);
    assert_eq!(e.method, "branch-and-bound");

    let doc: ReportDoc = json(&shiftfree(&["exact", "Z4", "{0,2}", "--format", "json"]));
    assert_eq!(doc.exact.unwrap().n, 3);

    let o = shiftfree(&[
        "exact",
        "Z2024",
        "cosets(order=8; reps=0)",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let e = json::<ReportDoc>(&o).exact.unwrap();
    assert_eq!((e.n, e.method.as_str()), (1772, "corollary"));
    assert_eq!(e.avoider.len(), 1771);
}

#[test]
fn exact_over_budget_keeps_bounds() {
    let o = shiftfree(&[
        "exact",
        "Z2024",
        "cosets(order=8; reps=0,1)",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let doc: ReportDoc = json(&o);
    assert!(doc.exact.is_none());
    assert_eq!(doc.bounds.thm2_lower, 1787);

    let o = shiftfree(&["exact", "Z40", "{0,1,3,7,12}", "--budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn construct_examples() {
    let o = shiftfree(&[
        "construct",
        "Z4",
        "{0,2}",
        "--method",
        "thm1",
        "--format",
        "json",
    ]);
    let doc: ConstructDoc = json(&o);
    assert_eq!(doc.certificate.elements, [0, 1]);
    assert!(doc.certificate.verified);

    let args = [
        "construct",
        "Z2024",
        "cosets(order=8; reps=0,1)",
        "--method",
        "thm2",
        "--seed",
        "1",
        "--format",
        "json",
    ];
    let doc: ConstructDoc = json(&shiftfree(&args));
    assert_eq!(doc.certificate.size, 1786);
    assert!(doc.certificate.verified);

    let args = [
        "construct",
        "Z6",
        "{0,1}",
        "--method",
        "search",
        "--target",
        "2",
        "--seed",
        "1",
    ];
    let o = shiftfree(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified     true"));

    let o = shiftfree(&["construct", "Z6", "{0,1}", "--method", "search"]);
    assert_eq!(o.status.code(), Some(1));
    let o = shiftfree(&[
        "construct",
        "Z6",
        "{0,1}",
        "--method",
        "thm1",
        "--target",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));

    let args = [
        "construct",
        "Z6",
        "{0,1}",
        "--method",
        "search",
        "--target",
        "4",
        "--max-repair-steps",
        "20",
    ];
    assert_eq!(shiftfree(&args).status.code(), Some(4));
}

#[test]
fn verify_examples() {
    let o = shiftfree(&["verify", "Z6", "{0,1}", "{0,2,4}"]);
    assert_eq!(o.status.code(), Some(0));

    let o = shiftfree(&["verify", "Z6", "{0,1}", "{0,1,3}", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let doc: VerifyDoc = json(&o);
    assert!(!doc.verified);
    assert_eq!(doc.witness, Some(0));

    assert_eq!(
        shiftfree(&["verify", "Z4", "{0,2}", "{0,1}"]).status.code(),
        Some(0)
    );
    let o = shiftfree(&["verify", "Z4xZ2", "{(1,1)}", "{(1,1)}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1_and_name_the_token() {
    let o = shiftfree(&["bounds", "Z4xQ2", "{0}"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Q2"));

    let o = shiftfree(&["bounds", "Z6", "{0,9}"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains('9'));

    assert_eq!(shiftfree(&["bounds", "Z6", "{}"]).status.code(), Some(1));
    assert_eq!(shiftfree(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        shiftfree(&["verify", "Z6", "{0}", "{0}", "--format", "csv"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn table_formats() {
    let doc: TableDoc = json(&shiftfree(&["table", "--format", "json"]));
    assert_eq!(doc.rows.len(), 10);
    assert_eq!(doc.rows[0].exact, Some(1772));
    let csv = stdout(&shiftfree(&["table", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,s,h,thm2_lower,upper,exact"));
    assert_eq!(lines.next(), Some("1,8,8,1772,1772,1772"));
    assert_eq!(lines.next(), Some("2,16,8,1787,1898,"));
}

#[test]
fn same_seed_same_bytes() {
    let args = [
        "construct",
        "Z91",
        "{0,1,5}",
        "--method",
        "thm2",
        "--seed",
        "17",
        "--format",
        "json",
    ];
    assert_eq!(shiftfree(&args).stdout, shiftfree(&args).stdout);
    let args = ["exact", "Z21", "{0,1,4,9}", "--format", "json"];
    assert_eq!(shiftfree(&args).stdout, shiftfree(&args).stdout);
}

#[test]
fn threads_from_environment() {
    let base = shiftfree(&["exact", "Z21", "{0,1,4,9}", "--format", "json"]);
    let o = Command::new(env!("CARGO_BIN_EXE_shiftfree"))
        .args(["exact", "Z21", "{0,1,4,9}", "--format", "json"])
        .env("SHIFTFREE_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, base.stdout);
}
