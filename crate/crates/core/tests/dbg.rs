#[test]
fn dbg_split() {
    use mahler_core::numerics::{isolate_roots, PrecisionContext};
    use mahler_core::poly::parse_poly;
    use mahler_core::rint;
    let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
    let delta = q.discriminant_in_y().unwrap().eval_k(&rint(2));
    let sf = delta.squarefree_part();
    println!("sf deg = {}, sf = {:?}", sf.deg(), sf);
    let ctx = PrecisionContext::new(40);
    let roots = isolate_roots(&sf, &ctx).unwrap();
    for r in &roots {
        println!("|r| - 1 = {:.3e}  radius = {:.3e}", r.value.abs().to_f64() - 1.0, r.radius.to_f64());
    }
    let st = mahler_core::poly::sturm_count_on_circle(&sf).unwrap();
    println!("sturm = {st}");
}
