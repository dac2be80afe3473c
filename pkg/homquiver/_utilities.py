"""
.. module:: _utilities
    :platform: Unix, Windows
    :synopsis: Defines internal utility functions, such as decorators, context managers and configuration readers

.. moduleauthor:: homquiver developers

"""

import os
import sys
from contextlib import contextmanager
from multiprocessing import Pool


# Initialize an empty __all__ for controlling imports
__all__ = []


def add_metaclass(metaclass):
    """ Class decorator for creating a class with a metaclass.

    Taken from ``six`` library version 1.12.0. Copyright (c) 2010-2018 Benjamin Peterson.
    ``six`` is licensed under the terms of MIT License.

    :param metaclass: metaclass
    """
    def wrapper(cls):
        orig_vars = cls.__dict__.copy()
        slots = orig_vars.get('__slots__')
        if slots is not None:
            if isinstance(slots, str):
                slots = [slots]
            for slots_var in slots:
                orig_vars.pop(slots_var)
        orig_vars.pop('__dict__', None)
        orig_vars.pop('__weakref__', None)
        if hasattr(cls, '__qualname__'):
            orig_vars['__qualname__'] = cls.__qualname__
        return metaclass(cls.__name__, cls.__bases__, orig_vars)
    return wrapper


@contextmanager
def pool_context(*args, **kwargs):
    """ Context manager for multiprocessing.Pool class """
    pool = Pool(*args, **kwargs)
    try:
        yield pool
    finally:
        pool.terminate()


def export(fn):
    """ Export decorator

    Please refer to the following SO article for details: https://stackoverflow.com/a/35710527
    """
    mod = sys.modules[fn.__module__]
    if hasattr(mod, '__all__'):
        mod.__all__.append(fn.__name__)
    else:
        mod.__all__ = [fn.__name__]
    return fn


def env_int(name, default):
    """ Reads a non-negative integer from the environment.

    :param name: environment variable name
    :type name: str
    :param default: value used when the variable is unset or empty
    :return: the configured value
    :rtype: int
    """
    value = os.environ.get(name, "")
    if not value.strip():
        return default
    try:
        result = int(value)
    except ValueError:
        raise ValueError("Environment variable {0} must be an integer, got '{1}'".format(name, value))
    if result < 0:
        raise ValueError("Environment variable {0} must be non-negative".format(name))
    return result


def cache_size():
    """ Size of the ``lru_cache`` used by combinatorial kernels (``HOMQUIVER_CACHE_SIZE``, default 1024) """
    return env_int('HOMQUIVER_CACHE_SIZE', 1024)


def parallel_map(func, items, num_procs=None):
    """ Applies ``func`` to every item, optionally on a process pool, keeping the input order.

    :param func: a picklable, module-level callable
    :param items: input items
    :type items: list
    :param num_procs: number of worker processes; ``None`` reads ``HOMQUIVER_PROCS`` (default 1)
    :return: list of results in input order
    :rtype: list
    """
    items = list(items)
    if num_procs is None:
        num_procs = env_int('HOMQUIVER_PROCS', 1)
    if num_procs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with pool_context(processes=min(num_procs, len(items))) as pool:
        return pool.map(func, items)
