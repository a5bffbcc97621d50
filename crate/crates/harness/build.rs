use std::env;

fn main() {
    for (var, name) in [
        ("PROFILE", "HARNESS_PROFILE"),
        ("OPT_LEVEL", "HARNESS_OPT_LEVEL"),
        ("TARGET", "HARNESS_TARGET"),
    ] {
        let v = env::var(var).unwrap_or_else(|_| "unknown".into());
        println!("cargo:rustc-env={name}={v}");
    }
    println!("cargo:rerun-if-changed=build.rs");
}
