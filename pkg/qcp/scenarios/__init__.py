#!/usr/bin/env python3
# encoding: utf-8

from qcp.scenarios.register import (catalog,
                                    get_scenario_info,
                                    register)

register(
    name='einstein_boxes',
    scenario_class='EinsteinBoxes',
    figure='Sec. 4',
    description='trapped packet opening into two lobes, boxed by a wall inserted at t_b'
)

register(
    name='beam_splitter',
    scenario_class='BeamSplitter',
    figure='Fig. 2',
    description='source, 50/50 beam splitter, two arms, two detectors'
)

register(
    name='mach_zehnder',
    scenario_class='MachZehnder',
    figure='Fig. 3',
    description='two beam splitters, phase plate and a shutter on the lower path; dark detector D1'
)

register(
    name='three_arm_hwp',
    scenario_class='ThreeArmHwp',
    figure='Fig. 1',
    description='three arms recombined on one detector, half-wave plate on arm 2'
)

register(
    name='stern_gerlach',
    scenario_class='SternGerlach',
    figure='Sec. 8',
    description='spin-1/2 read by a pointer along a tilted axis; POVM of the apparatus'
)

register(
    name='epr',
    scenario_class='Epr',
    figure='Sec. 8',
    description='singlet, two randomly set Stern-Gerlach apparatuses, 16 branches'
)

register(
    name='retrodiction_lab',
    scenario_class='RetrodictionLab',
    figure='Sec. 9',
    description='particle and two detectors whose triggered state records the path'
)

register(
    name='test_particle_disturbance',
    scenario_class='ParticleDisturbance',
    module='particle_disturbance',
    figure='Sec. 9',
    description='Mach-Zehnder whose lower path kicks a test particle'
)
