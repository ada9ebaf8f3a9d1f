"""Command-line front end: ``mcxc energy|convergence|rotation|torque --config FILE``.

The config is flat ``key = value`` text with dotted section prefixes::

    scene.name = spin_spiral
    scene.q = 1
    scene.m0 = 1
    functional = toy1_gga
    angular.scheme = lebedev
    angular.order = 3
    box = 0,1,0,1,0,1
    grid.n_per_axis = 8

Output is CSV with a versioned ``#`` header line.
"""
import argparse
import configparser
import csv
import io
import sys

import numpy as np

from mcxc import __version__, engine
from mcxc.angular import Scheme, make_grid
from mcxc.fields import (SCENES, SpinRotation, make_scene, octahedral_rotations,
                         random_rotations, rotate_spin, sample)
from mcxc.functionals import FUNCTIONALS, get_functional

CSV_SCHEMA = "mcxc-csv/1"
COMMANDS = ("energy", "convergence", "rotation", "torque")


class ConfigError(ValueError):
    pass


def fmt(x):
    """17 significant digits, '.' decimal; empty for missing values."""
    if x is None:
        return ""
    return format(float(x) + 0.0, ".17g")  # + 0.0 folds -0 into 0


def _floats(text):
    return tuple(float(v) for v in text.replace(" ", "").split(",") if v)


def _ints(text):
    return tuple(int(v) for v in text.replace(" ", "").split(",") if v)


def read_config(text):
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",),
                                       comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string("[run]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config: {exc}") from None
    return dict(parser["run"])


class RunConfig:
    """Resolved run settings; every name is checked against its registry."""

    def __init__(self, raw):
        self.raw = dict(raw)
        self.scene_name = self._get("scene.name")
        if self.scene_name not in SCENES:
            raise ConfigError(f"unknown scene {self.scene_name!r}; known: {', '.join(SCENES)}")
        self.scene_params = {}
        for key, val in raw.items():
            if key.startswith("scene.") and key != "scene.name":
                vals = _floats(val)
                self.scene_params[key[6:]] = vals if len(vals) != 1 or "," in val else vals[0]
        try:
            self.scene = make_scene(self.scene_name, self.scene_params)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        fid = self._get("functional")
        if fid not in FUNCTIONALS:
            raise ConfigError(f"unknown functional {fid!r}; known: {', '.join(FUNCTIONALS)}")
        self.functional = get_functional(fid)
        self.box = self._box(raw.get("box", "-1,1"))
        self.n_per_axis = int(raw.get("grid.n_per_axis", "8"))
        self.scheme = raw.get("angular.scheme", "lebedev")
        if self.scheme not in {s.value for s in Scheme}:
            raise ConfigError(f"unknown angular scheme {self.scheme!r}")

    def _get(self, key):
        try:
            return self.raw[key]
        except KeyError:
            raise ConfigError(f"config is missing {key!r}") from None

    @staticmethod
    def _box(text):
        vals = _floats(text)
        if len(vals) == 2:
            vals = vals * 3
        if len(vals) != 6:
            raise ConfigError("box needs 'lo,hi' or six numbers")
        return tuple(zip(vals[0::2], vals[1::2]))

    def angular_grid(self):
        size = {}
        for key in ("order", "n_theta", "n_phi", "n"):
            if f"angular.{key}" in self.raw:
                size[key] = int(self.raw[f"angular.{key}"])
        try:
            return make_grid(self.scheme, **size)
        except (ValueError, TypeError) as exc:
            raise ConfigError(str(exc)) from None

    def field(self):
        try:
            return sample(self.scene, self.box, self.n_per_axis)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def describe(self):
        return f"scene={self.scene_name} functional={self.functional.name}"


def _energy(field, func, ang):
    if func.local:
        return engine.mc_energy(field, func, ang)
    return engine.mc_energy_nonlocal(field, func, ang)


def _diff(a, b):
    return None if a is None or b is None else a - b


def cmd_energy(cfg):
    field, func, ang = cfg.field(), cfg.functional, cfg.angular_grid()
    mc = _energy(field, func, ang)
    lc = (engine.locally_collinear_energy(field, func)
          if func.name in engine.LC_FUNCTIONALS else None)
    try:
        closed = engine.closed_form_mc(field, func)
    except ValueError:
        closed = None
    header = ["functional", "scene", "n_directions", "mc_energy", "lc_energy",
              "closed_form", "mc_minus_lc", "mc_minus_closed_form"]
    row = [func.name, cfg.scene_name, str(len(ang.weights)), fmt(mc), fmt(lc), fmt(closed),
           fmt(_diff(mc, lc)), fmt(_diff(mc, closed))]
    return header, [row]


def _reference(field, func):
    """Closed form for toys, per-point t-integral oracle otherwise."""
    try:
        return engine.closed_form_mc(field, func)
    except ValueError:
        mag = np.linalg.norm(field.m, axis=1)
        return engine.integrate(field.w, engine.lsda_t_integral_oracle(field.n, mag, func))


def _sweep(cfg):
    raw = cfg.raw
    out = []
    if "convergence.lebedev" in raw:
        out += [("lebedev", {"order": o}) for o in _ints(raw["convergence.lebedev"])]
    if "convergence.gauss_legendre" in raw:
        for item in raw["convergence.gauss_legendre"].replace(" ", "").split(","):
            nt, _, nph = item.partition("x")
            out.append(("gauss_legendre", {"n_theta": int(nt), "n_phi": int(nph or 2 * int(nt))}))
    if "convergence.fibonacci" in raw:
        out += [("fibonacci", {"n": n}) for n in _ints(raw["convergence.fibonacci"])]
    if not out:
        raise ConfigError("convergence needs convergence.lebedev, .gauss_legendre or .fibonacci")
    return out


def cmd_convergence(cfg):
    field, func = cfg.field(), cfg.functional
    sweep = _sweep(cfg)
    ref = _reference(field, func)
    rows = []
    for scheme, size in sweep:
        try:
            ang = make_grid(scheme, **size)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        rows.append([scheme, str(len(ang.weights)), fmt(abs(_energy(field, func, ang) - ref))])
    return ["scheme", "n_points", "abs_error"], rows


def rotations_for(cfg):
    kind = cfg.raw.get("rotation.kind", "random")
    if kind == "random":
        return random_rotations(int(cfg.raw.get("rotation.count", "20")),
                                int(cfg.raw.get("rotation.seed", "0")))
    if kind == "octahedral":
        return octahedral_rotations()
    raise ConfigError(f"rotation.kind must be 'random' or 'octahedral', got {kind!r}")


def cmd_rotation(cfg):
    field, func, ang = cfg.field(), cfg.functional, cfg.angular_grid()
    e0 = _energy(field, func, ang)
    rows = []
    for i, rot in enumerate([SpinRotation.identity()] + rotations_for(cfg)):
        rows.append([str(i), fmt(abs(_energy(rotate_spin(field, rot), func, ang) - e0))])
    return ["index", "abs_delta_e"], rows


def cmd_torque(cfg):
    field, func, ang = cfg.field(), cfg.functional, cfg.angular_grid()
    if not func.local:
        raise ConfigError(f"torque maps need a local functional, not {func.name}")
    res = engine.solve(field, func, ang, cfg.raw.get("torque.method", "auto"))
    header = ["kind", "x", "y", "z", "m_x", "m_y", "m_z", "B_x", "B_y", "B_z",
              "torque_x", "torque_y", "torque_z"]
    rows = []
    for r, m, b, t in zip(field.r, field.m, res.bxc, res.torque):
        rows.append(["point"] + [fmt(v) for v in (*r, *m, *b, *t)])
    rows.append(["global"] + [""] * 9 + [fmt(v) for v in res.global_torque])
    return header, rows


HANDLERS = {"energy": cmd_energy, "convergence": cmd_convergence,
            "rotation": cmd_rotation, "torque": cmd_torque}


def render_csv(command, cfg, header, rows):
    buf = io.StringIO(newline="")
    seed = ""
    if command == "rotation":
        seed = f" rotation.kind={cfg.raw.get('rotation.kind', 'random')}" \
               f" rotation.seed={cfg.raw.get('rotation.seed', '0')}"
    buf.write(f"# {CSV_SCHEMA} mcxc={__version__} command={command} {cfg.describe()}{seed}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def run(command, config_text):
    """Execute one command on config text and return the CSV string."""
    if command not in HANDLERS:
        raise ConfigError(f"unknown command {command!r}")
    cfg = RunConfig(read_config(config_text))
    header, rows = HANDLERS[command](cfg)
    return render_csv(command, cfg, header, rows)


def build_parser():
    parser = argparse.ArgumentParser(prog="mcxc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"mcxc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HANDLERS[name].__name__.replace("cmd_", "") + " report")
        p.add_argument("--config", required=True, help="key=value config file")
        p.add_argument("--out", help="write CSV here instead of stdout")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with open(args.config, encoding="utf-8") as fh:
            text = fh.read()
        out = run(args.command, text)
    except (OSError, ValueError) as exc:
        print(f"mcxc: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
