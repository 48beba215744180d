"""Sensor-attacker-target pursuit-evasion game: analysis and simulation.

A slow sensor must keep a target within its sensing radius while a fast
attacker, guided only while the target is sensed, runs it down. The target
commits to one heading at the start. This package computes the escape
region, capture test and speed thresholds in closed form, and simulates
engagements as an independent check.
"""

from .analysis import (
    AnalysisError,
    ApolloniusCircle,
    BracketError,
    Containment,
    EscapeSolution,
    QuadraticCoefficients,
    SensableBoundary,
    SpeedBounds,
    TangencyError,
    apollonius,
    capture_guaranteed,
    critical_speed,
    escape_distance,
    escape_heading,
    min_escape,
    point_in_sensable,
    sensable_boundary,
    speed_bounds,
    tangent_escape_speed,
    tangent_quadratic,
)
from .geometry import DegenerateGeometryError, Point2, distance, los_angle, point_along, wrap_angle
from .model import ConfigError, DerivedGeometry, EngagementConfig, derive_geometry, load_scenario
from .simulation import (
    EngagementOutcome,
    Interception,
    OutcomeKind,
    SimulationParams,
    Trajectory,
    oracle_escape_time,
    oracle_interception,
    simulate,
)
from .strategy import (
    PolicyKind,
    StrategyAssignment,
    TargetPolicy,
    assign,
    attacker_heading,
    sensor_heading,
    target_heading,
)

__version__ = "0.1.0"
