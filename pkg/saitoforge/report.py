import time

from .constants import SCHEMA
from .exceptions import UsageError
from .util import parse_scalar, parse_vector

PASS = "pass"
FAIL = "fail"

_NEEDS_GROUP = ("group", "connection", "saito", "flat", "dual", "test-e", "search-e", "cover")


class Report(object):
    """Outcome of one command.

    Attributes:
        command: the command that produced it
        group: the group name, when the command has one
        sections: named results in insertion order
        status: pass or fail
    """

    def __init__(self, command, group=None):
        self.command = command
        self.group = group
        self.sections = {}
        self.status = PASS
        self.error = None
        self.__started = time.perf_counter()
        self.elapsed = None

    def add(self, name, value):
        if hasattr(value, "serializable_data"):
            value = value.serializable_data()
        self.sections[name] = value
        return value

    def check(self, name, passed, value=None):
        """Record a named check; a failed check fails the report."""
        if value is not None:
            self.add(name, value)
        if not passed:
            self.status = FAIL
        return passed

    def fail(self, error):
        self.status = FAIL
        self.error = {"name": type(error).__name__, "message": str(error)}

    def finish(self):
        self.elapsed = time.perf_counter() - self.__started
        return self

    @property
    def exit_code(self):
        return SCHEMA.EXIT_OK if self.status == PASS else SCHEMA.EXIT_FAILURE

    @property
    def data(self):
        # elapsed time stays out so that reruns give identical files
        return {
            "command": self.command,
            "group": self.group,
            "status": self.status,
            "error": self.error,
            "results": self.sections,
        }

    def serializable_data(self):
        return self.data

    @property
    def text(self):
        lines = [f"{self.command} {self.group or ''}".rstrip() + f": {self.status}"]
        if self.error is not None:
            lines.append(f"  {self.error['name']}: {self.error['message']}")
        for name, value in self.sections.items():
            lines.append(f"  {name}:")
            lines.extend(f"    {line}" for line in _text_lines(value))
        if self.elapsed is not None:
            lines.append(f"  elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<Report {self.command} {self.group}: {self.status}>"


def _text_lines(value):
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f"{key}:"
                for line in _text_lines(item):
                    yield f"  {line}"
            else:
                yield f"{key}: {item}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines = list(_text_lines(item))
                yield "- " + (lines[0] if lines else "")
                for line in lines[1:]:
                    yield f"  {line}"
            else:
                yield f"- {item}"
    else:
        yield str(value)


class RunConfig(object):
    """Validated arguments of one invocation.

    Numeric flags are parsed into exact scalars; missing or contradictory
    flags raise UsageError.
    """

    def __init__(
        self,
        command,
        group=None,
        value=None,
        r=None,
        nu=None,
        e=None,
        row=None,
        flat=False,
        path=None,
        out=None,
        output_format="text",
        groups=None,
        verbosity=0,
    ):
        self.command = command
        self.group = group
        self.value = parse_scalar(value) if value is not None else parse_scalar("0")
        self.r = parse_scalar(r) if r is not None else None
        self.nu = parse_scalar(nu) if nu is not None else None
        self.e = parse_vector(e) if e is not None else None
        self.row = row
        self.flat = flat
        self.path = path
        self.out = out
        self.output_format = output_format
        self.groups = groups
        self.verbosity = verbosity
        self.validate()

    def validate(self):
        if self.command in _NEEDS_GROUP and not self.group:
            raise UsageError(f"{self.command} needs a group")
        if self.command == "test-e" and self.e is None:
            raise UsageError("test-e needs --e")
        if self.command == "verify" and not self.path:
            raise UsageError("verify needs a file")
        if self.row is not None and self.row < 1:
            raise UsageError(f"--row must be positive, got {self.row}")
        if self.output_format not in ("text", "json"):
            raise UsageError(f"Unknown format {self.output_format}")

    @classmethod
    def from_arguments(cls, arguments):
        return cls(
            arguments.command,
            group=getattr(arguments, "group", None),
            value=getattr(arguments, "lambda_", None),
            r=getattr(arguments, "r", None),
            nu=getattr(arguments, "nu", None),
            e=getattr(arguments, "e", None),
            row=getattr(arguments, "row", None),
            flat=getattr(arguments, "flat", False),
            path=getattr(arguments, "file", None),
            out=getattr(arguments, "out", None),
            output_format="json" if getattr(arguments, "json", False) else "text",
            groups=getattr(arguments, "groups", None),
            verbosity=arguments.verbose,
        )

    def __repr__(self):
        return f"<RunConfig {self.command} {self.group}>"
