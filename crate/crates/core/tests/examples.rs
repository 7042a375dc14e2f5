// Each runnable example doubles as a smoke test.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            let out = $name::run_example().unwrap();
            assert!(!out.is_empty());
        }
    };
}

example!(word_algebra, "../examples/word_algebra.rs");
example!(laurent_arithmetic, "../examples/laurent_arithmetic.rs");
example!(fox_calculus, "../examples/fox_calculus.rs");
example!(alexander_from_presentation, "../examples/alexander_from_presentation.rs");
example!(twisted_torus_family, "../examples/twisted_torus_family.rs");
example!(certify_unit_circle_root, "../examples/certify_unit_circle_root.rs");
example!(classify_surgery, "../examples/classify_surgery.rs");
example!(generic_root_finder, "../examples/generic_root_finder.rs");
