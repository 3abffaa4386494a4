// dev scratch: figure-1 derivation
use multicurve::skein::{Expander, SkeinElement};
use multicurve::surface::{class_of, Multiloop, Surface};

#[test]
fn dev_figure_one() {
    let s = Surface::four_punctured_sphere();
    let e = Expander::new(&s);
    let cl = |t: &str| class_of(&s.parse_word(t).unwrap()).unwrap();
    let alpha = cl("x1 x2");
    let beta = cl("x2 x3");
    println!("alpha = {}", s.format_class(&alpha));
    println!("beta  = {}", s.format_class(&beta));
    println!("i(alpha,beta) = {}", multicurve::intersect::geom_intersection(&s, &alpha, &beta).unwrap());
    let m = Multiloop::new(vec![alpha.clone(), beta.clone()]);
    let f = e.expand(&m).unwrap();
    println!("product = {}", f.pretty(&s));
    for (mu, c) in f.terms() {
        let words: Vec<String> = mu.components().iter().map(|x| s.format_class(x)).collect();
        println!("  coeff {} : [{}]", c, words.join(" | "));
    }
    let br = e
        .goldman_bracket(
            &SkeinElement::basis(multicurve::skein::Multicurve::new(&s, vec![alpha]).unwrap()),
            &SkeinElement::basis(multicurve::skein::Multicurve::new(&s, vec![beta]).unwrap()),
        )
        .unwrap();
    println!("bracket = {}", br.pretty(&s));
}
