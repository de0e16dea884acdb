//! The frame-determinant Maslov index against the rotation-number rule
//! mu = 2·(rot1 + rot2) on movie-lifted loops whose coordinate projections
//! are immersed or constant.

use torlink_core::{
    close_up, close_up_standard_cylinder, maslov_index, plane_liouville_area, rotation_number,
    CloseUpParams, ClosedUpTorus, LinkedCylinderParams, SampledLoop4,
};

fn rot_or_constant(curve: &torlink_core::SampledCurve2) -> Option<i64> {
    rotation_number(curve).ok()
}

/// `nodes` parametrize the loop for its projections; `path` is the grid
/// refinement fed to the frame winding. Both trace the same loop.
fn check_loop(
    torus: &ClosedUpTorus,
    nodes: &[(usize, usize)],
    path: &[(usize, usize)],
    label: &str,
) -> bool {
    let samples: Vec<_> = nodes.iter().map(|&(i, j)| torus.surface.point(i, j)).collect();
    let loop4 = SampledLoop4::new(samples).unwrap();
    let (Some(r1), Some(r2)) = (rot_or_constant(&loop4.proj1()), rot_or_constant(&loop4.proj2()))
    else {
        return false; // projection neither immersed nor constant: rule not applicable
    };
    let Ok(mu) = maslov_index(&torus.surface, path) else {
        return false; // winding not trustworthy at this sampling
    };
    assert_eq!(mu, 2 * (r1 + r2), "{label}: mu {mu} vs rots ({r1},{r2})");
    true
}

#[test]
fn frame_method_matches_rotation_rule_on_fifty_loops() {
    let cyl = LinkedCylinderParams::new(1.0, 0.5)
        .unwrap()
        .with_resolution(128, 128);
    let cu = CloseUpParams::new(10.0, cyl.t_extent + 5.0).with_resolution(128, 128);
    let glued = close_up(&cyl, &cu).unwrap();
    let stat = close_up_standard_cylinder((0.0, 0.0), 1.0, &cu).unwrap();

    let mut checked = 0usize;
    // the movie-carrying torus keeps only low-winding diagonals: past that
    // the row sampling of the transition band under-resolves the projection
    // polygon and the rotation oracle itself degrades
    let ks_glued: &[i64] = &[-3, -2, -1, 1, 2, 3];
    let ks_static: &[i64] = &[-8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8];
    for (tname, torus, ks) in [("glued", &glued, ks_glued), ("static", &stat, ks_static)] {
        let (_, nt) = torus.surface.dims();
        // meridians across the whole t-range: rot1 = 1, plane-2 constant
        // (transition-band meridians have a non-immersed second projection
        // and fall outside the rule)
        for j in (0..nt).step_by(nt / 24) {
            let path = torus.surface.s_loop_path(j);
            if check_loop(torus, &path, &path, &format!("{tname} meridian {j}")) {
                checked += 1;
            }
        }
        // diagonals winding k times in s per t-cycle
        for &k in ks {
            let nodes = torus.surface.diagonal_nodes(k);
            let path = torus.surface.diagonal_path(k);
            if check_loop(torus, &nodes, &path, &format!("{tname} diagonal {k}")) {
                checked += 1;
            }
            let rnodes: Vec<_> = nodes.iter().rev().cloned().collect();
            let rpath: Vec<_> = path.iter().rev().cloned().collect();
            if check_loop(torus, &rnodes, &rpath, &format!("{tname} reversed diagonal {k}")) {
                checked += 1;
            }
        }
    }
    assert!(checked >= 50, "only {checked} loops had applicable projections");
}

#[test]
fn marked_loops_agree_with_their_projections() {
    let cyl = LinkedCylinderParams::new(1.0, 0.5)
        .unwrap()
        .with_resolution(128, 128);
    let cu = CloseUpParams::new(10.0, cyl.t_extent + 5.0).with_resolution(128, 128);
    let t = close_up(&cyl, &cu).unwrap();
    // sigma: rot1 = 1, constant second projection
    assert_eq!(rotation_number(&t.sigma.proj1()).unwrap(), 1);
    assert_eq!(rotation_number(&t.sigma.proj2()).unwrap(), 0);
    assert_eq!(t.maslov_sigma, 2);
    // tau: profile projection positively oriented with rotation number 1
    assert_eq!(rotation_number(&t.tau.proj2()).unwrap(), 1);
    assert!(plane_liouville_area(&t.tau.proj2()).unwrap() > 0.0);
    assert_eq!(t.maslov_tau, 2);
}
