use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rho_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { rho_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(rho_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn exact_values() {
    let ctx = rho_context_new(0);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(rho_c(ctx, 3, 2, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "85/36");
        assert_eq!(rho_c(ctx, -3, 2, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "-3/2");
        assert_eq!(rho_stirling_first(ctx, -2, 1, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "-3/4");
        assert_eq!(rho_stirling_second(ctx, 5, 2, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "15");
        assert_eq!(rho_bernoulli(ctx, 2, 1, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "-1");
        assert_eq!(rho_bernoulli(ctx, 1, 2, &mut out), RhoStatus::InvalidArgument);
        assert_eq!(rho_harmonic(3, 2, &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "49/36");
        rho_context_free(ctx);
    }
}

#[test]
fn derivatives() {
    let ctx = rho_context_new(0);
    let one = CString::new("1").unwrap();
    let minus_one = CString::new("-1").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(rho_pochhammer_deriv(ctx, 3, 1, one.as_ptr(), &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "11");
        assert_eq!(rho_recip_deriv(2, 1, one.as_ptr(), &mut out), RhoStatus::Ok);
        assert_eq!(take(out), "-3/4");
        out = ptr::null_mut();
        assert_eq!(rho_recip_deriv(3, 0, minus_one.as_ptr(), &mut out), RhoStatus::Pole);
        assert!(out.is_null());
        assert!(last_error().contains("-1"));
        rho_context_free(ctx);
    }
}

#[test]
fn quadratures() {
    let (mut value, mut err) = (0.0, 0.0);
    unsafe {
        assert_eq!(rho_coffey_moment(4, 2, 1e-10, &mut value, &mut err), RhoStatus::Ok);
        assert!((value - 85.0 / 72.0).abs() < 1e-9);
        assert_eq!(rho_quad_c(3, 2, 1e-10, &mut value, &mut err), RhoStatus::Ok);
        assert!((value - 85.0 / 36.0).abs() < 1e-9);
        assert!(err >= 0.0);
        assert_eq!(rho_quad_c(3, 2, 1e-18, &mut value, &mut err), RhoStatus::Convergence);
    }
}

#[test]
fn errors() {
    let ctx = rho_context_new(0);
    let mut out = ptr::null_mut();
    let bad_utf8 = [0xffu8 as c_char, 0];
    let junk = CString::new("x/y").unwrap();
    unsafe {
        assert_eq!(rho_c(ctx, 2, -1, &mut out), RhoStatus::InvalidArgument);
        assert!(last_error().contains("-1"));
        assert_eq!(rho_c(ptr::null(), 2, 1, &mut out), RhoStatus::NullPointer);
        assert_eq!(rho_c(ctx, 2, 1, ptr::null_mut()), RhoStatus::NullPointer);
        assert_eq!(rho_recip_deriv(2, 1, ptr::null(), &mut out), RhoStatus::NullPointer);
        assert_eq!(rho_recip_deriv(2, 1, bad_utf8.as_ptr(), &mut out), RhoStatus::Utf8);
        assert_eq!(rho_recip_deriv(2, 1, junk.as_ptr(), &mut out), RhoStatus::InvalidArgument);
        assert_eq!(rho_stirling_second(ctx, -1, 1, &mut out), RhoStatus::InvalidArgument);
        assert_eq!(rho_c(ctx, 2, 1, &mut out), RhoStatus::Ok);
        assert_eq!(last_error(), "");
        take(out);
        rho_context_free(ctx);
        rho_context_free(ptr::null_mut());
        rho_string_free(ptr::null_mut());
    }
}

#[test]
fn capped_context() {
    let ctx = rho_context_new(3);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(rho_c(ctx, 30, 6, &mut out), RhoStatus::CapacityExceeded);
        rho_context_free(ctx);
    }
}

#[test]
fn shared_across_threads() {
    struct Shared(*mut RhoContext);
    unsafe impl Sync for Shared {}
    let ctx = Shared(rho_context_new(0));
    std::thread::scope(|s| {
        for n in 1..=4i64 {
            let ctx = &ctx;
            s.spawn(move || {
                let mut out = ptr::null_mut();
                assert_eq!(unsafe { rho_c(ctx.0, n, 1, &mut out) }, RhoStatus::Ok);
                take(out);
            });
        }
    });
    unsafe { rho_context_free(ctx.0) };
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "rho.h"

int main(void) {
    RhoContext *ctx = rho_context_new(0);
    char *out = NULL;
    if (rho_c(ctx, 3, 2, &out) != RHO_STATUS_OK || strcmp(out, "85/36") != 0) return 1;
    rho_string_free(out);
    if (rho_recip_deriv(3, 0, "-1", &out) != RHO_STATUS_POLE) return 2;
    if (strlen(rho_last_error()) == 0) return 3;
    rho_context_free(ctx);
    puts("ok");
    return 0;
}
"#;

#[test]
fn header_links_from_c() {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib_dir = deps.parent().unwrap();
    let archive = lib_dir.join("librho_ffi.a");
    if !archive.exists() {
        eprintln!("skipping: {} was not built", archive.display());
        return;
    }
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("smoke.c");
    let exe = dir.join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
