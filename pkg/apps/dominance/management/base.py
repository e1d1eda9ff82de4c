# Rest Framework
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

# Django
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

# Python
import logging

# Local
from dominance.exceptions import DominanceError
from dominance.fileformat import parse
from dominance.geometry import Instance


logger = logging.getLogger(__name__)


class DominanceCommand(BaseCommand):
    """
    Base class of the solver commands.

    Subclasses implement ``run``; solver, validation and I/O errors become a
    ``CommandError`` so the process exits nonzero with the message.
    """

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except ValidationError as exc:
            raise CommandError("; ".join(exc.messages))
        except serializers.ValidationError as exc:
            raise CommandError(f"invalid input: {exc.detail}")
        except (DominanceError, OSError) as exc:
            raise CommandError(str(exc))

    def run(self, *args, **options):
        raise NotImplementedError

    def load_instance(self, path: str, k: int | None = None) -> Instance:
        """
        Parse an instance file, optionally replacing its budget.

        :param path: Instance file.
        :type path: str
        :param k: Budget override.
        :type k: int | None
        :return: The instance.
        :rtype: Instance
        """
        inst = parse(path)
        if k is not None:
            inst = inst.with_budget(k)
        return inst

    def emit_record(self, serializer: serializers.Serializer) -> str:
        serializer.is_valid(raise_exception=True)
        text = JSONRenderer().render(serializer.data).decode("utf-8")
        self.stdout.write(text)
        return text

    @property
    def solver_limits(self) -> dict:
        return {
            "pred_limit": settings.MAXDOM_PRED_LIMIT,
            "memory_budget": settings.MAXDOM_MEMORY_BUDGET,
        }
