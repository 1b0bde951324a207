use lkrep_core::verify::{run_all, VerifyOptions};

#[test]
fn acceptance_criteria() {
    let results = run_all(VerifyOptions::default());
    for r in &results {
        println!("{}", r.line());
        for n in &r.notes {
            println!("       note: {n}");
        }
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
