"""The nom permutation code and its combinatorics.

A permutation p of [n] factors as (1,f_1)(2,f_2)...(n,f_n) for exactly
one word f with 1 <= f_i <= i; f is the nom code of p.  This package
provides the encoders and decoders for that correspondence, the grid
and forest views, the Catalan-sized class of permutations with
non-decreasing codes, and length-3 pattern avoidance inside it.
"""

from .avoidance import (
    avoiders,
    avoids_321_criterion,
    blocks_anchored,
    count_132_by_recurrence,
    count_avoiders,
    decompose_blocks,
    enumerate_partitions,
    enumerate_X,
    enumerate_Y,
    flip,
    flip_matches_inverse_reverse_complement,
    format_partition,
    from_partition,
    growth_table_321,
    in_D,
    in_V,
    in_Y,
    lift_one,
    lift_stairs,
    parse_partition,
    partition_count,
    partition_count_by_largest,
    plateau1_count,
    to_partition,
    x_count,
    y_count_by_ima,
)
from .codec import (
    decode_cycle_insertion,
    decode_insertion,
    decode_transpositions,
    encode_nom,
    encode_selection_sort,
    grid_decode,
    grid_encode,
    insertion_steps,
    perm_graph,
    sef_graph,
    selection_sort_steps,
)
from .forest import (
    Tree,
    eulerian,
    extend_with_max,
    forest_of,
    postorder,
    postorder_nodes,
    stanley_tree,
    to_dot,
)
from .ndperm import (
    ax_pairs_of,
    check_characterization,
    enumerate_ax_pair_sets,
    enumerate_nd_perms,
    format_ax_pairs,
    is_nd_perm,
    parse_ax_pairs,
    reconstruct_perm,
    sef_from_ax_pairs,
    validate_ax_pairs,
)
from .perms import (
    anti_exceedances,
    avoids,
    complement,
    compose,
    contains_pattern,
    cycles,
    exceedances,
    format_cycles,
    format_perm,
    from_cycles,
    inverse,
    nom,
    parse_perm,
    reverse,
)
from .sef import (
    catalan,
    enumerate_nondecreasing_sefs,
    enumerate_sefs,
    format_sef,
    from_lattice_path,
    image,
    ima,
    imrp,
    is_nondecreasing,
    parse_sef,
    r_vector,
    sef_from_r_vector,
    to_lattice_path,
)

__version__ = "0.1.0"
