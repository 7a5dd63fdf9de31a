import logging

CRITICAL = logging.CRITICAL
ERROR = logging.ERROR
WARNING = logging.WARNING
INFO = logging.INFO
DEBUG = logging.DEBUG
NOTSET = logging.NOTSET

_loggers = set()
_log_level = NOTSET
_file_handlers = {}
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(filename)s:%(lineno)d] %(message)s"


def get_logger(name: str) -> logging.Logger:
    """
    Create a logger with the specified name. The logger picks up the level
    given to set_log_level() and any file attached through set_log_file(),
    including calls made before the logger existed.
    """
    logger = logging.getLogger(name=name)
    if _log_level != NOTSET:
        logger.setLevel(_log_level)
    for handler in _file_handlers.values():
        if handler not in logger.handlers:
            logger.addHandler(handler)
    _loggers.add(logger)
    return logger


def set_log_level(log_level: int) -> None:
    """
    Set the logging level of every qcp logger. Messages go to stderr so that
    stdout stays free for machine-readable output.
    """
    global _log_level
    _log_level = log_level

    if _log_level > INFO or _log_level == DEBUG:
        logging.basicConfig(level=_log_level, format=LOG_FORMAT, datefmt=DATE_FORMAT)
    else:
        logging.basicConfig(level=_log_level, format='%(message)s')

    for logger in _loggers:
        logger.setLevel(log_level)


def set_log_file(log_file: str = None) -> None:
    if not log_file or log_file in _file_handlers:
        return
    handler = logging.FileHandler(log_file, encoding='utf-8')
    handler.setLevel(_log_level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
    _file_handlers[log_file] = handler
    for logger in _loggers:
        logger.addHandler(handler)
