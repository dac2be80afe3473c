"""
.. module:: abstract
    :platform: Unix, Windows
    :synopsis: Provides abstract base classes for the module categories handled by the library

.. moduleauthor:: homquiver developers

"""

import abc
from . import _utilities as utl


@utl.add_metaclass(abc.ABCMeta)
class AbstractCategory(object):
    """ Abstract base class for finite-length module categories with enough projectives.

    A category is described by a finite-dimensional algebra whose modules it contains. Path algebras and Serre
    subcategories (realized as quotient algebras) derive from this class, so that the resolution engine works
    uniformly over both.

    This class provides the following properties:

    * :py:attr:`name`
    * :py:attr:`ambient`
    * :py:attr:`simples`
    * :py:attr:`dimension`

    **Keyword Arguments:**

    * ``name``: category name. *Default: category*
    """

    def __init__(self, **kwargs):
        self._name = kwargs.get('name', "category")
        self._cache = dict()  # projective modules and other lazily computed data

    def __str__(self):
        return self.name

    __repr__ = __str__

    def __getstate__(self):
        # Cached modules hold references back to the category; rebuild them after unpickling
        state = self.__dict__.copy()
        state['_cache'] = dict()
        return state

    @property
    def name(self):
        """ Category name.

        :getter: Gets the name
        :setter: Sets the name
        :type: str
        """
        return self._name

    @name.setter
    def name(self, value):
        self._name = str(value)

    @property
    @abc.abstractmethod
    def ambient(self):
        """ Path algebra whose representations carry the objects of this category.

        :getter: Gets the ambient path algebra
        """
        pass

    @property
    @abc.abstractmethod
    def simples(self):
        """ Vertex indices of the simple objects, in ascending order.

        :getter: Gets the simple indices
        :type: tuple
        """
        pass

    @property
    @abc.abstractmethod
    def dimension(self):
        """ Dimension of the algebra defining the category.

        :getter: Gets the dimension
        :type: int
        """
        pass

    @abc.abstractmethod
    def projective(self, i):
        """ Indecomposable projective object with top the simple at vertex index ``i``.

        :param i: vertex index
        :type i: int
        :return: projective module
        :rtype: repcat.ProjectiveModule
        """
        pass

    def simple(self, i):
        """ Simple object at vertex index ``i``.

        :param i: vertex index
        :type i: int
        :return: simple module
        :rtype: repcat.Representation
        """
        from . import repcat
        return repcat.simple_at(self.ambient, i)
