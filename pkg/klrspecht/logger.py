"""Session logger shared by the library modules and the command line."""
import logging
import sys

# extra verbosity below DEBUG for individual rewrite steps
logging.TRACE = 5
logging.addLevelName(logging.TRACE, "TRACE")


def trace(self, message, *args, **kws):
    """Log at TRACE level."""
    if self.isEnabledFor(logging.TRACE):
        self._log(logging.TRACE, message, args, **kws)


logging.Logger.trace = trace

user_logger = logging.getLogger("klrspecht")
if not user_logger.handlers:
    out_hdlr = logging.StreamHandler(sys.stdout)
    out_hdlr.setFormatter(logging.Formatter("%(asctime)s - %(message)s"))
    out_hdlr.setLevel(logging.TRACE)
    user_logger.addHandler(out_hdlr)
user_logger.setLevel(logging.INFO)
user_logger.propagate = False


def set_verbosity(debug=False, trace=False):
    """Set the logger level from the --debug and --trace flags."""
    if trace:
        user_logger.setLevel(logging.TRACE)
    elif debug:
        user_logger.setLevel(logging.DEBUG)
    else:
        user_logger.setLevel(logging.INFO)


# -fin-
