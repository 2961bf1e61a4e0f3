from contextlib import contextmanager
from io import StringIO
import sys

from . import log


@contextmanager
def captured_output(verbose=False):
    """Swap stdout and stderr for buffers while the block runs.

    Log functions look the streams up at call time, so reports and
    diagnostics land in the buffers. With verbose, debug lines are
    emitted too; the normal log mode is restored afterwards.
    """
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    if verbose:
        log.set_verbose()
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err
        if verbose:
            log.set_normal()
