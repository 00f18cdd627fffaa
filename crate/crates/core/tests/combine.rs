use atm_core::corpus::words;
use atm_core::transforms::{combine, dual, one_sided, Side};
use atm_core::{decide, input_symbols, zoo, Budget, Verdict};

#[test]
fn complementary_pairs_combine_into_total_machines() {
    for p in zoo::complementary_pairs() {
        let m0 = one_sided(&p.language, Side::Plus).unwrap();
        let m1 = dual(&one_sided(&p.complement, Side::Plus).unwrap());
        let c = combine(&m0, &m1).unwrap();
        assert!(c.validate().is_ok());
        let sigma: Vec<char> = c.input_alphabet().iter().map(|s| s.glyph()).collect();
        for w in words(&sigma, 4) {
            let v = decide(&c, &input_symbols(&w), &Budget::default()).unwrap();
            let expect = if (p.member)(&w) { Verdict::Accepted } else { Verdict::Rejected };
            assert_eq!(v, expect, "{} on {w:?}", p.name);
        }
    }
}
