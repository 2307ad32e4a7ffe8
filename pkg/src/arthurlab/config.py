import logging
import os
import pathlib
import typing

import attr

from ._error import InvariantBroken
from ._validation import positive, type_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "ARTHURLAB_"
PACKAGED_FIXTURES = pathlib.Path(__file__).parent / "corpus"


@attr.s(frozen=True, slots=True)
class Settings:
    """Tunables shared by the library, the suites and the command line.

    Every field can be overridden with an ``ARTHURLAB_<FIELD>`` environment
    variable, see :meth:`from_env`.
    """

    search_depth = attr.ib(
        type=int, default=64, validator=[type_validator(), positive()]
    )
    max_states = attr.ib(
        type=int, default=10 ** 6, validator=[type_validator(), positive()]
    )
    fixtures = attr.ib(
        type=pathlib.Path,
        default=PACKAGED_FIXTURES,
        converter=pathlib.Path,
        validator=type_validator(),
    )
    workers = attr.ib(
        type=int, default=1, validator=[type_validator(), positive()]
    )

    @classmethod
    def from_env(
        cls, environ: typing.Optional[typing.Mapping[str, str]] = None
    ) -> "Settings":
        environ = os.environ if environ is None else environ
        overrides = {}
        for field in attr.fields(cls):
            value = environ.get(ENV_PREFIX + field.name.upper())
            if value is None:
                continue
            if field.type is int:
                try:
                    overrides[field.name] = int(value)
                except ValueError:
                    raise InvariantBroken(
                        "{}{} is an integer".format(
                            ENV_PREFIX, field.name.upper()
                        ),
                        value,
                    )
            else:
                overrides[field.name] = value
        if "fixtures" in overrides:
            logger.warning(
                "fixture corpus overridden by environment: %s",
                overrides["fixtures"],
            )
        return cls(**overrides)

    def evolve(self, **changes) -> "Settings":
        changes = {key: value for key, value in changes.items() if value}
        return attr.evolve(self, **changes)
