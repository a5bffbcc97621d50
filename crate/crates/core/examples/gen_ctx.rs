use std::time::Instant;
fn main() {
    let t = Instant::now();
    let ctx = gabidulin_core::basis_search::build_normal_basis(0).unwrap();
    eprintln!(
        "built in {:?}: C_M = {}, self-dual = {}",
        t.elapsed(),
        ctx.complexity(),
        ctx.is_self_dual()
    );
    print!("{}", gabidulin_core::ctx_file::write_ctx(&ctx));
}
