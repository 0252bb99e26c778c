use super::*;

#[test]
fn corpus_passes_and_is_deterministic() {
    let (a, fa) = run_corpus().unwrap();
    assert_eq!(fa, 0, "{a}");
    let (b, _) = run_corpus().unwrap();
    assert_eq!(a, b);
}

#[test]
fn decoder_check_catches_a_wrong_decoder() {
    let mut c = orders::omega_unary().unwrap();
    c.decode = Some(std::sync::Arc::new(|w: &str| crate::ordinal::Cnf::nat(10 - w.len().min(10) as u64)));
    assert!(decoder_agrees(&c, 20).unwrap().is_err());
}
